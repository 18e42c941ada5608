#include "monideal/simplex.hpp"

#include <cstddef>
#include <limits>
#include <optional>

#include "monideal/errors.hpp"

namespace monideal {

bool simplex_feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                      std::vector<Rational>* solution) {
  const std::size_t m = a.size();
  if (b.size() != m) throw StructuralError("simplex: row count mismatch");
  const std::size_t n = m ? a.front().size() : 0;
  for (const auto& row : a)
    if (row.size() != n) throw StructuralError("simplex: ragged matrix");

  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) {
      b[i] = -b[i];
      for (auto& v : a[i]) v = -v;
    }
  }

  // Find unit columns usable as an initial basis.
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> basis(m, none);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t hit = none;
    bool unit = true;
    for (std::size_t i = 0; i < m && unit; ++i) {
      const int s = sgn(a[i][j]);
      if (s == 0) continue;
      if (a[i][j] == 1 && hit == none)
        hit = i;
      else
        unit = false;
    }
    if (unit && hit != none && basis[hit] == none) basis[hit] = j;
  }

  std::size_t cols = n;
  std::vector<bool> artificial(n, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] != none) continue;
    for (std::size_t r = 0; r < m; ++r) a[r].emplace_back(r == i ? 1 : 0);
    basis[i] = cols++;
    artificial.push_back(true);
  }

  // Reduced costs of the phase-1 objective (sum of artificials) and its value.
  std::vector<Rational> cost(cols, 0);
  Rational value = 0;
  for (std::size_t j = 0; j < cols; ++j)
    if (artificial[j]) cost[j] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (!artificial[basis[i]]) continue;
    for (std::size_t j = 0; j < cols; ++j) cost[j] -= a[i][j];
    value += b[i];
  }

  while (sgn(value) > 0) {
    // Bland: lowest-index column with negative reduced cost enters.
    std::size_t enter = none;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == none) break;

    std::size_t leave = none;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(a[i][enter]) <= 0) continue;
      Rational ratio = b[i] / a[i][enter];
      if (leave == none || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    // The phase-1 objective is bounded below by zero, so some row qualifies.
    if (leave == none) throw std::logic_error("simplex: unbounded phase-1 problem");

    const Rational piv = a[leave][enter];
    for (auto& v : a[leave]) v /= piv;
    b[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(a[i][enter]) == 0) continue;
      const Rational f = a[i][enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(a[leave][j]) != 0) a[i][j] -= f * a[leave][j];
      b[i] -= f * b[leave];
    }
    if (sgn(cost[enter]) != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(a[leave][j]) != 0) cost[j] -= f * a[leave][j];
      value += f * b[leave];
    }
    basis[leave] = enter;
  }

  if (sgn(value) != 0) return false;
  if (solution) {
    solution->assign(n, 0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) (*solution)[basis[i]] = b[i];
  }
  return true;
}

} // namespace monideal

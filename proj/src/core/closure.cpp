#include "monideal/closure.hpp"

#include <algorithm>

#include "monideal/deadline.hpp"
#include "monideal/errors.hpp"
#include "monideal/rational.hpp"
#include "monideal/simplex.hpp"

namespace monideal {

namespace {

// sum a_i / b_i >= 1 rewritten over the common denominator L = lcm(b_i):
// sum a_i * (L / b_i) >= L.
class PurePowerTest {
public:
  explicit PurePowerTest(const IrredComponent& c) : lcm_(1) {
    for (const auto& [i, b] : c.powers()) mpz_lcm_ui(lcm_.get_mpz_t(), lcm_.get_mpz_t(), b);
    for (const auto& [i, b] : c.powers()) terms_.emplace_back(i, Integer(lcm_ / Integer(static_cast<unsigned long>(b))));
  }

  bool operator()(const Monomial& a) const {
    Integer acc = 0;
    for (const auto& [i, w] : terms_) {
      if (a[i] == 0) continue;
      acc += w * Integer(static_cast<unsigned long>(a[i]));
      if (acc >= lcm_) return true;
    }
    return acc >= lcm_;
  }

private:
  Integer lcm_;
  std::vector<std::pair<std::size_t, Integer>> terms_;
};

bool np_membership_impl(const MonomialIdeal& ideal, const Monomial& a) {
  const auto& gens = ideal.gens();
  for (const auto& g : gens)
    if (g.divides(a)) return true;

  // Only coordinates where some generator exceeds a constrain the multipliers.
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Exponent lo = gens.front()[i], hi = gens.front()[i];
    for (const auto& g : gens) {
      lo = std::min(lo, g[i]);
      hi = std::max(hi, g[i]);
    }
    if (lo > a[i]) return false;
    if (hi > a[i]) active.push_back(i);
  }

  // Unknowns: multipliers l_j (one per generator), then one slack per active row.
  //   sum_j v_j[i] l_j + s_i = a_i   (i active)
  //   sum_j l_j             = 1
  const std::size_t r = gens.size();
  const std::size_t k = active.size();
  std::vector<std::vector<Rational>> A(k + 1, std::vector<Rational>(r + k, 0));
  std::vector<Rational> b(k + 1, 0);
  for (std::size_t row = 0; row < k; ++row) {
    const std::size_t i = active[row];
    for (std::size_t j = 0; j < r; ++j) A[row][j] = static_cast<unsigned long>(gens[j][i]);
    A[row][r + row] = 1;
    b[row] = static_cast<unsigned long>(a[i]);
  }
  for (std::size_t j = 0; j < r; ++j) A[k][j] = 1;
  b[k] = 1;
  return simplex_feasible(std::move(A), std::move(b));
}

// Scans the box in lexicographic order so every b <= a is seen before a. A
// point whose lower neighbour a - e_i is a member is itself a member; only
// points without such a neighbour are tested, and a positive test there is
// exactly a minimal generator.
template <class Test>
MonomialIdeal scan_box(const MonomialIdeal& ideal, const Test& test) {
  const std::size_t nv = ideal.ring()->size();
  const auto bound = max_exponents(ideal);
  const auto dims = support_union(ideal);
  const std::size_t d = dims.size();

  std::vector<std::size_t> stride(d, 1);
  std::size_t total = 1;
  for (std::size_t k = d; k-- > 0;) {
    stride[k] = total;
    total = static_cast<std::size_t>(checked_mul(total, bound[dims[k]] + 1));
  }

  std::vector<char> member(total, 0);
  std::vector<Exponent> coord(d, 0);
  Monomial point = Monomial::one(nv);
  std::vector<Monomial> minimal;

  for (std::size_t flat = 0; flat < total; ++flat) {
    if ((flat & 0x3ff) == 0) check_deadline();
    bool inherited = false;
    for (std::size_t k = 0; k < d && !inherited; ++k)
      inherited = coord[k] > 0 && member[flat - stride[k]];
    if (inherited) {
      member[flat] = 1;
    } else if (test(point)) {
      member[flat] = 1;
      minimal.push_back(point);
    }

    // Odometer step, last coordinate fastest.
    for (std::size_t k = d; k-- > 0;) {
      if (coord[k] < bound[dims[k]]) {
        ++coord[k];
        point[dims[k]] = coord[k];
        break;
      }
      coord[k] = 0;
      point[dims[k]] = 0;
    }
  }

  for (const auto& g : minimal)
    for (std::size_t i = 0; i < nv; ++i)
      if (g[i] > bound[i]) throw std::logic_error("closure generator outside the enumeration box");
  return MonomialIdeal(ideal.ring(), std::move(minimal));
}

} // namespace

bool pure_power_membership(const IrredComponent& powers, const Monomial& a) {
  if (a.size() != powers.ring()->size()) throw StructuralError("monomial does not match ring");
  return PurePowerTest(powers)(a);
}

bool np_membership(const MonomialIdeal& ideal, const Monomial& a) {
  if (ideal.is_zero()) throw DomainError("Newton polyhedron of the zero ideal");
  if (a.size() != ideal.ring()->size()) throw StructuralError("monomial does not match ring");
  return np_membership_impl(ideal, a);
}

bool np_membership(const ClosureQuery& query) { return np_membership(query.ideal, query.point); }

MonomialIdeal closure_generators(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("integral closure of the zero ideal");
  if (ideal.is_unit()) return ideal;
  if (ideal.is_pure_power()) {
    PurePowerTest test(as_component(ideal));
    return scan_box(ideal, test);
  }
  return scan_box(ideal, [&](const Monomial& a) { return np_membership_impl(ideal, a); });
}

MonomialIdeal closure_power(const MonomialIdeal& ideal, unsigned n) {
  if (ideal.is_zero()) throw DomainError("integral closure of the zero ideal");
  if (n == 0) return MonomialIdeal::unit(ideal.ring());
  std::vector<Monomial> gens;
  for (const auto& u : ideal.gens()) gens.push_back(u.pow(n));
  return closure_generators(MonomialIdeal(ideal.ring(), std::move(gens)));
}

MonomialIdeal closure_power_ci(const MonomialIdeal& ideal, unsigned n) {
  if (!ideal.is_proper() || !is_complete_intersection(ideal))
    throw DomainError("closure_power_ci needs a complete intersection");
  MonomialIdeal acc = MonomialIdeal::unit(ideal.ring());
  for (const auto& q : irreducible_decomposition(ideal).components)
    acc = intersect(acc, closure_power(q.ideal(), n));
  return acc;
}

} // namespace monideal

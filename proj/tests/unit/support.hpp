#pragma once

// Shorthand for building rings, monomials and ideals from the document
// grammar inside tests.

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/document.hpp"
#include "monideal/ring.hpp"

namespace mt {

using namespace monideal;

inline RingPtr ring(std::vector<std::string> vars) { return make_ring(std::move(vars)); }

inline Monomial mono(const RingPtr& r, std::string_view term) { return parse_monomial(term, *r); }

/// Comma-separated terms; "" is the zero ideal.
inline MonomialIdeal ideal(const RingPtr& r, std::string_view terms) {
  std::vector<Monomial> gens;
  std::size_t start = 0;
  while (start < terms.size()) {
    auto end = terms.find(',', start);
    if (end == std::string_view::npos) end = terms.size();
    auto t = terms.substr(start, end - start);
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    gens.push_back(mono(r, t));
    start = end + 1;
  }
  return MonomialIdeal(r, std::move(gens));
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, Exponent max_exp) {
  std::uniform_int_distribution<Exponent> e(0, max_exp);
  std::vector<Exponent> v(n);
  for (auto& x : v) x = e(rng);
  return Monomial(std::move(v));
}

} // namespace mt

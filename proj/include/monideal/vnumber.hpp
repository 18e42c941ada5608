#pragma once

// v-numbers by bounded exhaustive search.
//
// A monomial f certifies v_P(I) <= deg f when (I : f) = P. The search only
// visits f with supp(f) inside the support of G(I) and f_i <= M_i, the largest
// exponent of x_i among the generators: a variable outside that support can be
// dropped from f without changing the colon, and gcd(u, f) is unchanged once
// f_i reaches M_i. Candidates are visited by increasing degree and, inside a
// degree, in canonical monomial order.

#include <utility>
#include <vector>

#include "monideal/decompose.hpp"
#include "monideal/ring.hpp"

namespace monideal {

/// A monomial f with (I : f) = prime. Only constructible through verified().
class Witness {
public:
  /// Throws std::logic_error unless (ideal : f) = prime.
  static Witness verified(const MonomialIdeal& ideal, Monomial f, MonomialPrime prime);

  const Monomial& monomial() const noexcept { return monomial_; }
  const MonomialPrime& prime() const noexcept { return prime_; }
  Exponent degree() const noexcept { return degree_; }

private:
  Witness(Monomial f, MonomialPrime p, Exponent d)
      : monomial_(std::move(f)), prime_(std::move(p)), degree_(d) {}

  Monomial monomial_;
  MonomialPrime prime_;
  Exponent degree_;
};

struct LocalVNumber {
  Exponent value;
  Witness witness;
};

struct VNumberReport {
  MonomialIdeal ideal;
  /// One entry per associated prime, in the order of associated_primes().
  std::vector<LocalVNumber> locals;
  Exponent v;

  const LocalVNumber& at(const MonomialPrime& p) const;
};

/// (ideal : f) == P as canonical ideals.
bool check_witness(const MonomialIdeal& ideal, const Monomial& f, const MonomialPrime& p);

/// DomainError when p is not associated to the ideal.
LocalVNumber local_v_number(const MonomialIdeal& ideal, const MonomialPrime& p);

/// Every local v-number in a single pass over the search space.
/// DomainError for the zero and unit ideals.
VNumberReport v_number(const MonomialIdeal& ideal);

} // namespace monideal

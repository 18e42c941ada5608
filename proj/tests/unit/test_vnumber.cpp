#include <doctest.h>

#include "monideal/closure.hpp"
#include "monideal/errors.hpp"
#include "monideal/formulas.hpp"
#include "monideal/verify.hpp"
#include "monideal/vnumber.hpp"
#include "support.hpp"

using namespace mt;

namespace {

MonomialPrime prime(const RingPtr& r, std::vector<std::size_t> v) { return MonomialPrime(r, std::move(v)); }

// Brute-force local v-number over every monomial with exponents <= bound
// (no support restriction), for checking the restricted search.
std::optional<Exponent> brute_local(const MonomialIdeal& I, const MonomialPrime& p, Exponent bound) {
  const std::size_t n = I.ring()->size();
  std::optional<Exponent> best;
  std::vector<Exponent> a(n, 0);
  while (true) {
    const Monomial f(a);
    if ((!best || f.degree() < *best) && check_witness(I, f, p)) best = f.degree();
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (a[i] < bound) {
        ++a[i];
        done = false;
        break;
      }
      a[i] = 0;
    }
    if (done) return best;
  }
}

} // namespace

TEST_CASE("check_witness") {
  auto r = ring({"x", "y"});
  const auto I = ideal(r, "x^2, y^3");
  const auto P = prime(r, {0, 1});
  CHECK(check_witness(I, mono(r, "x*y^2"), P));
  CHECK_FALSE(check_witness(I, mono(r, "x"), P));
  CHECK_FALSE(check_witness(I, mono(r, "x^2"), P));
  CHECK_THROWS_AS(Witness::verified(I, mono(r, "x"), P), std::logic_error);
  const auto w = Witness::verified(I, mono(r, "x*y^2"), P);
  CHECK(w.degree() == 3);
}

TEST_CASE("local v-numbers") {
  auto r = ring({"x", "y"});
  auto l = local_v_number(ideal(r, "x^2, y^3"), prime(r, {0, 1}));
  CHECK(l.value == 3);
  CHECK(l.witness.monomial() == mono(r, "x*y^2"));

  l = local_v_number(ideal(r, "x^2, x*y"), prime(r, {0}));
  CHECK(l.value == 1);
  CHECK(l.witness.monomial() == mono(r, "y"));

  l = local_v_number(ideal(r, "x"), prime(r, {0}));
  CHECK(l.value == 0);
  CHECK(l.witness.monomial().is_one());

  CHECK_THROWS_AS(local_v_number(ideal(r, "x^2, y^3"), prime(r, {0})), DomainError);
}

TEST_CASE("v-number reports") {
  auto r = ring({"x", "y"});
  auto rep = v_number(ideal(r, "x^2, x*y"));
  CHECK(rep.v == 1);
  CHECK(rep.at(prime(r, {0})).value == 1);
  CHECK(rep.at(prime(r, {0, 1})).value >= 1);

  CHECK(v_number(ideal(r, "x^2, y^3")).v == 3);

  const auto c = closure_generators(ideal(r, "x^2, y^3"));
  REQUIRE(c == ideal(r, "x^2, x*y^2, y^3"));
  rep = v_number(c);
  CHECK(rep.v == 2);
  CHECK(rep.locals.front().witness.monomial() == mono(r, "x*y"));

  // a prime ideal has v = 0 with witness 1
  rep = v_number(ideal(r, "x, y"));
  CHECK(rep.v == 0);
  CHECK(rep.locals.front().witness.monomial().is_one());

  CHECK_THROWS_AS(v_number(MonomialIdeal::zero(r)), DomainError);
  CHECK_THROWS_AS(v_number(MonomialIdeal::unit(r)), DomainError);
}

TEST_CASE("search restriction is safe on random ideals") {
  std::mt19937_64 rng(3);
  auto r = standard_ring(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto I = random_ideal(rng, r, 3, 2);
    const auto rep = v_number(I);
    const auto ass = associated_primes(I);
    REQUIRE(rep.locals.size() == ass.size());
    Exponent vmin = rep.locals.front().value;
    const auto M = max_exponents(I);
    const auto supp = support_union(I);
    for (std::size_t k = 0; k < ass.size(); ++k) {
      const auto& l = rep.locals[k];
      CHECK(l.witness.prime() == ass[k]);
      CHECK(check_witness(I, l.witness.monomial(), ass[k]));
      CHECK(l.witness.degree() == l.value);
      // minimality against an unrestricted brute force one step past the box
      CHECK(brute_local(I, ass[k], 3) == l.value);
      vmin = std::min(vmin, l.value);

      // metamorphic: variables outside the support and exponents past M_i leave the colon unchanged
      const auto f = l.witness.monomial();
      for (std::size_t i = 0; i < 3; ++i) {
        const bool outside = std::find(supp.begin(), supp.end(), i) == supp.end();
        if (outside) CHECK(colon(I, f) == colon(I, f * Monomial::variable(3, i, 2)));
        if (f[i] >= M[i]) CHECK(colon(I, f) == colon(I, f * Monomial::variable(3, i)));
      }
    }
    CHECK(rep.v == vmin);
  }
}

TEST_CASE("complete-intersection powers: value at every prime and witness divisibility") {
  std::mt19937_64 rng(29);
  auto r = standard_ring(5);
  for (int trial = 0; trial < 25; ++trial) {
    const auto I = random_ci(rng, r, 3, 2);
    const auto v1 = v_number(I).v;
    const auto a = alpha(I);
    for (unsigned n = 1; n <= 2; ++n) {
      const auto rep = v_number(power(I, n));
      CHECK(rep.v == n * a + v1 - a);
      for (const auto& l : rep.locals) {
        CHECK(l.value == rep.v);
        const auto spec = make_ci_spec(I, l.witness.prime());
        REQUIRE(spec);
        const auto g = spec->base_witness();
        REQUIRE(g.divides(l.witness.monomial()));
        CHECK((l.witness.monomial() / g).degree() >= (n - 1) * a);
      }
    }
  }
}

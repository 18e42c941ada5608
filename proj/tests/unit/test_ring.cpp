#include <doctest.h>

#include <limits>

#include "monideal/errors.hpp"
#include "support.hpp"
#include "monideal/verify.hpp"

using namespace mt;

TEST_CASE("ring rejects empty and duplicate names") {
  CHECK_THROWS_AS(make_ring({}), StructuralError);
  CHECK_THROWS_AS(make_ring({"x", "x"}), StructuralError);
  CHECK_THROWS_AS(make_ring({"x", ""}), StructuralError);
  auto r = ring({"x", "y"});
  CHECK(r->index_of("y") == 1);
  CHECK(r->index_of("q") == 2);
}

TEST_CASE("checked exponent arithmetic") {
  const Exponent big = std::numeric_limits<Exponent>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), OverflowError);
  CHECK_THROWS_AS(Monomial({big}).pow(2), OverflowError);
}

TEST_CASE("monomial basics") {
  auto r = ring({"x", "y", "z"});
  const auto m = mono(r, "x^2*y");
  CHECK(m.degree() == 3);
  CHECK(m.support() == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(m.is_squarefree());
  CHECK(mono(r, "x*z").is_squarefree());
  CHECK(Monomial::one(3).is_one());
  CHECK(to_string(Monomial::one(3), *r) == "1");
  CHECK(to_string(m, *r) == "x^2*y");
  CHECK(mono(r, "x").divides(m));
  CHECK_FALSE(mono(r, "z").divides(m));
  CHECK(m / mono(r, "x") == mono(r, "x*y"));
  CHECK_THROWS_AS(m / mono(r, "z"), DomainError);
  CHECK(gcd(m, mono(r, "x*y^3")) == mono(r, "x*y"));
  CHECK(lcm(m, mono(r, "x*y^3")) == mono(r, "x^2*y^3"));
}

TEST_CASE("canonical order: degree, then larger leading exponent first") {
  auto r = ring({"x", "y"});
  CHECK(mono(r, "x^2") < mono(r, "x*y"));
  CHECK(mono(r, "x*y") < mono(r, "y^2"));
  CHECK(mono(r, "y^2") < mono(r, "x^3"));
}

TEST_CASE("minimalize") {
  auto r = ring({"x", "y"});
  // {x², x²y, y³} → {x², y³}
  CHECK(ideal(r, "x^2, x^2*y, y^3").gens() == ideal(r, "x^2, y^3").gens());
  CHECK(ideal(r, "x^2, x^2*y, y^3").num_gens() == 2);
  // {x} → {x}
  CHECK(ideal(r, "x").gens() == std::vector<Monomial>{mono(r, "x")});
  // {xy, x²y, xy², x³} → {xy, x³}
  CHECK(ideal(r, "x*y, x^2*y, x*y^2, x^3").gens() == std::vector<Monomial>{mono(r, "x*y"), mono(r, "x^3")});
  CHECK_THROWS_AS(MonomialIdeal(r, {Monomial{1, 0, 0}}), StructuralError);
}

TEST_CASE("zero and unit ideals are distinguished") {
  auto r = ring({"x", "y"});
  CHECK(MonomialIdeal::zero(r).is_zero());
  CHECK(MonomialIdeal::unit(r).is_unit());
  CHECK(ideal(r, "1, x").is_unit());
  CHECK_FALSE(MonomialIdeal::unit(r).is_proper());
  CHECK_THROWS_AS(alpha(MonomialIdeal::zero(r)), DomainError);
}

TEST_CASE("colon by a monomial") {
  auto r = ring({"x", "y", "z"});
  // (⟨x²y, z³⟩ : xz) → ⟨xy, z²⟩
  CHECK(colon(ideal(r, "x^2*y, z^3"), mono(r, "x*z")) == ideal(r, "x*y, z^2"));
  const auto I = ideal(r, "x^2*y, z^3");
  CHECK(colon(I, Monomial::one(3)) == I);
  CHECK(colon(ideal(r, "x^2"), mono(r, "x^2")).is_unit());
}

TEST_CASE("intersection") {
  auto r = ring({"x", "y"});
  CHECK(intersect(ideal(r, "x"), ideal(r, "y")) == ideal(r, "x*y"));
  CHECK(intersect(ideal(r, "x^2, y"), ideal(r, "x^2, y")) == ideal(r, "x^2, y"));
  CHECK(intersect(ideal(r, "x"), ideal(r, "x^2, y")) == ideal(r, "x^2, x*y"));
  auto s = ring({"x", "y"});
  CHECK(intersect(ideal(r, "x"), ideal(s, "y")) == ideal(r, "x*y"));
  auto t = ring({"a", "b"});
  CHECK_THROWS_AS(intersect(ideal(r, "x"), ideal(t, "a")), StructuralError);
}

TEST_CASE("powers") {
  auto r = ring({"x", "y"});
  CHECK(power(ideal(r, "x, y"), 2) == ideal(r, "x^2, x*y, y^2"));
  CHECK(power(ideal(r, "x^2, y^3"), 2) == ideal(r, "x^4, x^2*y^3, y^6"));
  CHECK(power(ideal(r, "x^2, y^3"), 1) == ideal(r, "x^2, y^3"));
  CHECK(power(ideal(r, "x^2, y^3"), 0).is_unit());
}

TEST_CASE("alpha and delta") {
  auto r = ring({"x", "y"});
  CHECK(alpha(ideal(r, "x^2, y^3")) == 2);
  CHECK(delta(ideal(r, "x^2, y^3")) == 3);
  CHECK(alpha(ideal(r, "x*y")) == 2);
  CHECK(delta(ideal(r, "x*y")) == 2);
  CHECK(alpha(ideal(r, "x^4, x^2*y^3, y^6")) == 4);
  CHECK(delta(ideal(r, "x^4, x^2*y^3, y^6")) == 6);
}

TEST_CASE("contains, colon by an ideal, equigeneration, support") {
  auto r = ring({"x", "y", "z"});
  CHECK(contains(ideal(r, "x^2, y^3"), mono(r, "x^2*y")));
  CHECK_FALSE(contains(ideal(r, "x^2, y^3"), mono(r, "x*y^2")));
  CHECK(colon(ideal(r, "x^2, x*y"), ideal(r, "x")) == ideal(r, "x, y"));
  CHECK(is_equigenerated(ideal(r, "x*y, z^2")));
  CHECK_FALSE(is_equigenerated(ideal(r, "x, z^2")));
  CHECK(support_union(ideal(r, "x*z, z^2")) == std::vector<std::size_t>{0, 2});
  CHECK(max_exponents(ideal(r, "x*z^3, x^2")) == std::vector<Exponent>{2, 0, 3});
  CHECK(is_subset(ideal(r, "x^2*y"), ideal(r, "x")));
  CHECK(sum(ideal(r, "x"), ideal(r, "x^2, y")) == ideal(r, "x, y"));
  CHECK(product(ideal(r, "x, y"), ideal(r, "z")) == ideal(r, "x*z, y*z"));
  CHECK(to_string(ideal(r, "y^3, x^2")) == "<x^2, y^3>");
}

TEST_CASE("delta of powers") {
  // the top-degree generator's power can be a non-minimal product
  auto r = ring({"x", "y", "z"});
  const auto I = ideal(r, "x^2, y^2, x*y*z^2");
  CHECK(delta(I) == 4);
  CHECK(delta(power(I, 2)) == 6);

  std::mt19937_64 rng(13);
  auto s = standard_ring(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ci = random_ci(rng, s, 3, 3);
    for (unsigned n = 1; n <= 4; ++n) CHECK(delta(power(ci, n)) == n * delta(ci));
    const auto eq = random_ideal(rng, s, 4, 3, 3);
    for (unsigned n = 1; n <= 3; ++n) CHECK(delta(power(eq, n)) == 3 * n);
  }
}

TEST_CASE("algebraic laws on random ideals") {
  std::mt19937_64 rng(11);
  auto r = standard_ring(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto I = random_ideal(rng, r, 4, 3);
    const auto J = random_ideal(rng, r, 4, 3);
    const auto K = random_ideal(rng, r, 3, 3);
    const auto v = random_monomial(rng, 3, 2);
    const auto w = random_monomial(rng, 3, 2);

    CHECK(minimalize(r, I.gens()) == I);
    CHECK(is_subset(I, colon(I, v)));
    CHECK(colon(colon(I, v), w) == colon(I, v * w));
    CHECK(intersect(I, J) == intersect(J, I));
    CHECK(intersect(intersect(I, J), K) == intersect(I, intersect(J, K)));
    CHECK(intersect(I, I) == I);
    for (unsigned a = 1; a <= 3; ++a) {
      for (unsigned b = 1; a + b <= 4; ++b) CHECK(power(I, a + b) == product(power(I, a), power(I, b)));
    }
    for (unsigned n = 1; n <= 4; ++n) {
      CHECK(alpha(power(I, n)) == n * alpha(I));
      CHECK(delta(power(I, n)) <= n * delta(I));
    }
    // colon by an ideal is the intersection of the single colons
    auto expect = MonomialIdeal::unit(r);
    for (const auto& g : J.gens()) expect = intersect(expect, colon(I, g));
    CHECK(colon(I, J) == expect);
    for (const auto& g : I.gens()) {
      CHECK(contains(I, g * v));
    }
  }
}

// Acceptance run: one PASS/FAIL line per criterion, each with its own time
// limit. Exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "monideal/closure.hpp"
#include "monideal/decompose.hpp"
#include "monideal/formulas.hpp"
#include "monideal/verify.hpp"
#include "monideal/vnumber.hpp"

using namespace monideal;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

int g_failed = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool ok = t.failures == 0 && in_time;
  if (!ok) ++g_failed;
  std::printf("[%s] %2d %-52s %7zu checks, %zu failed, %8.2f s (limit %.0f s)", ok ? "PASS" : "FAIL", id,
              title.c_str(), t.checks, t.failures, secs, limit_seconds);
  if (t.failures) std::printf("  first failure: %s", t.first_failure.c_str());
  if (!in_time) std::printf("  over time limit");
  std::printf("\n");
  std::fflush(stdout);
}

std::string show(const MonomialIdeal& I) { return to_string(I); }

std::string num(std::int64_t v) { return std::to_string(v); }

// The instance family shared by criteria 2, 3 and 6.
std::vector<MonomialIdeal> random_ci_family() {
  std::mt19937_64 rng(kSeed);
  const auto ring = standard_ring(5);
  std::vector<MonomialIdeal> out;
  for (int i = 0; i < 200; ++i) out.push_back(random_ci(rng, ring, 3, 3));
  return out;
}

// Every point of prod [0, bound_i], last coordinate fastest.
void for_box(const std::vector<Exponent>& bound, const std::function<void(const Monomial&)>& f) {
  std::vector<Exponent> a(bound.size(), 0);
  while (true) {
    f(Monomial(a));
    std::size_t i = a.size();
    while (i > 0 && a[i - 1] == bound[i - 1]) a[--i] = 0;
    if (i == 0) return;
    ++a[i - 1];
  }
}

// All exponent tuples of the given length with entries in [lo, hi].
void for_tuples(std::size_t len, Exponent lo, Exponent hi, bool sorted,
                const std::function<void(const std::vector<Exponent>&)>& f) {
  std::vector<Exponent> cur(len, lo);
  while (true) {
    if (!sorted || std::is_sorted(cur.begin(), cur.end())) f(cur);
    std::size_t i = len;
    while (i > 0 && cur[i - 1] == hi) cur[--i] = lo;
    if (i == 0) return;
    ++cur[i - 1];
  }
}

void c1_membership(Tally& t) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto ring = standard_ring(k);
    for_tuples(k, 1, 6, false, [&](const std::vector<Exponent>& b) {
      std::vector<Monomial> gens;
      std::vector<std::pair<std::size_t, Exponent>> powers;
      for (std::size_t i = 0; i < k; ++i) {
        gens.push_back(Monomial::variable(k, i, b[i]));
        powers.emplace_back(i, b[i]);
      }
      const MonomialIdeal I(ring, gens);
      const IrredComponent c(ring, powers);
      for_box(b, [&](const Monomial& a) {
        t.expect(np_membership(I, a) == pure_power_membership(c, a),
                 show(I) + " at " + to_string(a, *ring));
      });
    });
  }
}

void c2_ci_value(Tally& t) {
  for (const auto& I : random_ci_family()) {
    Exponent sum = 0;
    for (const auto& u : I.gens()) sum += u.degree();
    const Exponent expect = sum - I.num_gens();
    const auto rep = v_number(I);
    t.expect(rep.v == expect, show(I) + ": v=" + num(rep.v) + " expected " + num(expect));
    for (const auto& l : rep.locals)
      t.expect(l.value == expect, show(I) + " at " + to_string(l.witness.prime()) + ": " + num(l.value));
  }
}

void c3_ci_powers(Tally& t) {
  for (const auto& I : random_ci_family()) {
    const Exponent a = alpha(I);
    const Exponent v1 = v_number(I).v;
    for (unsigned n = 1; n <= 3; ++n) {
      const auto rep = v_number(power(I, n));
      const Exponent expect = n * a + v1 - a;
      const std::string tag = show(I) + " n=" + num(n);
      t.expect(rep.v == expect, tag + ": v=" + num(rep.v) + " expected " + num(expect));
      for (const auto& l : rep.locals) {
        t.expect(l.value == expect, tag + " local " + to_string(l.witness.prime()));
        const auto spec = make_ci_spec(I, l.witness.prime());
        const auto g = spec->base_witness();
        const auto& m = l.witness.monomial();
        const bool divides = g.divides(m);
        t.expect(divides, tag + ": g does not divide the witness");
        if (divides) t.expect((m / g).degree() >= (n - 1) * a, tag + ": deg(m/g) too small");
      }
    }
  }
}

void c4_two_generators(Tally& t) {
  for (Exponent a1 = 1; a1 <= 5; ++a1) {
    for (Exponent a2 = a1; a2 <= 5; ++a2) {
      const auto spec = IrreducibleSpec::standard({a1, a2});
      for (unsigned n = 1; n <= 2; ++n) {
        const Exponent expect = n * a1 + (a2 + a1 - 1) / a1 - 2;
        const Exponent v = v_number(closure_power(spec.ideal(), n)).v;
        t.expect(v == expect, "(" + num(a1) + "," + num(a2) + ") n=" + num(n) + ": v=" + num(v));
      }
    }
  }
}

void c5_three_generators(Tally& t) {
  {
    const auto spec = IrreducibleSpec::standard({4, 7, 77});
    const auto f3 = f_m_exponents(4, 7, 77, 3);
    const Exponent deg_f3 = f3[0] + f3[1] + f3[2];
    const auto r = v_closure_3gen(spec, 1);
    const Exponent v = v_number(closure_power(spec.ideal(), 1)).v;
    t.expect(deg_f3 == 8, "(4,7,77): deg f_3 = " + num(deg_f3));
    t.expect(r.l == 3 && r.result.value == 8, "(4,7,77): formula l=" + num(r.l));
    t.expect(v == 8, "(4,7,77): oracle " + num(v));
  }
  {
    const auto spec = IrreducibleSpec::standard({5, 8, 100});
    const auto f2 = f_m_exponents(5, 8, 100, 2);
    const Exponent deg_f2 = f2[0] + f2[1] + f2[2];
    const auto r = v_closure_3gen(spec, 1);
    const Exponent v = v_number(closure_power(spec.ideal(), 1)).v;
    t.expect(r.l == 2 && r.result.value == deg_f2, "(5,8,100): formula l=" + num(r.l));
    t.expect(v == deg_f2, "(5,8,100): oracle " + num(v) + " deg f_2 " + num(deg_f2));
  }
  for (Exponent a2 = 1; a2 <= 6; ++a2) {
    for (Exponent a3 = a2; a3 <= 6; ++a3) {
      const auto spec = IrreducibleSpec::standard({1, a2, a3});
      for (unsigned n = 1; n <= 2; ++n) {
        const Exponent expect = n + a2 + (a3 + a2 - 1) / a2 - 3;
        const auto r = v_closure_3gen(spec, n);
        const Exponent v = v_number(closure_power(spec.ideal(), n)).v;
        const std::string tag = "(1," + num(a2) + "," + num(a3) + ") n=" + num(n);
        t.expect(r.result.exact() && r.result.value == expect, tag + ": formula " + num(r.result.value));
        t.expect(v == expect, tag + ": oracle " + num(v));
      }
    }
  }
}

void c6_height_two(Tally& t) {
  // (1)(i) and (1)(ii) on the shared random family
  for (const auto& I : random_ci_family()) {
    const bool strict = gap_strict_expected(I);
    for (unsigned n = 1; n <= 2; ++n) {
      const Exponent vp = v_number(power(I, n)).v;
      const Exponent vc = v_number(closure_power(I, n)).v;
      const std::string tag = show(I) + " n=" + num(n);
      t.expect(vc <= vp, tag + ": v(cl)=" + num(vc) + " > v=" + num(vp));
      if (strict) t.expect(vc + 1 <= vp, tag + ": expected a gap of at least 1");
    }
  }
  // (2) products
  for (std::size_t q = 1; q <= 2; ++q) {
    for (Exponent alpha = 1; alpha <= 2; ++alpha) {
      for (std::size_t l = q; l <= 3; ++l) {
        for_tuples(l, alpha, 3, true, [&](const std::vector<Exponent>& betas) {
          const auto spec = Height2Spec::standard(q, alpha, betas);
          for (unsigned n = 1; n <= 2; ++n) {
            const auto f = v_closure_h2_product(spec, n);
            const auto closure = closure_power(spec.ideal(), n);
            const auto rep = v_number(closure);
            const std::string tag = show(spec.ideal()) + " n=" + num(n);
            t.expect(f.exact(), tag + ": formula not exact");
            for (const auto& loc : rep.locals)
              t.expect(loc.value == f.value, tag + " at " + to_string(loc.witness.prime()) + ": oracle " +
                                                 num(loc.value) + " formula " + num(f.value));
          }
        });
      }
    }
  }
  // (4) splits
  for (const auto& [alpha, betas] : std::vector<std::pair<Exponent, std::vector<Exponent>>>{{3, {1, 2}}, {5, {1, 1, 3}}}) {
    const Exponent v = v_number(closure_power(h2_split_ideal(alpha, betas), 1)).v;
    t.expect(v == alpha, "split alpha=" + num(alpha) + ": oracle " + num(v));
    t.expect(v_closure_h2_split(alpha, betas, 1).value == alpha, "split formula");
  }
}

void c7_gap_families(Tally& t) {
  for (std::size_t q = 0; q <= 2; ++q) {
    const auto xy = make_ring({"x", "y"});
    std::vector<MonomialIdeal> family{MonomialIdeal(xy, {Monomial{q + 1, 0}, Monomial{0, q + 1}})};
    // at q = 0 the product family degenerates to the unit ideal; <x, y^2> is
    // the non-equigenerated member with gap 0
    family.push_back(q == 0 ? MonomialIdeal(xy, {Monomial{1, 0}, Monomial{0, 2}})
                            : Height2Spec::standard(q, 2, std::vector<Exponent>(q, 3)).ideal());
    for (const auto& I : family) {
      for (unsigned n = 1; n <= 3; ++n) {
        const auto fp = predict_power_v(I, n);
        const auto fc = predict_closure_v(I, n);
        const std::string tag = show(I) + " n=" + num(n);
        t.expect(fp.exact() && fc.exact(), tag + ": formulas not exact");
        t.expect(fp.value - fc.value == q, tag + ": formula gap " + num(static_cast<std::int64_t>(fp.value - fc.value)));
        if (n == 1) {
          const Exponent op = v_number(I).v;
          const Exponent oc = v_number(closure_power(I, 1)).v;
          t.expect(op == fp.value && oc == fc.value, tag + ": oracle " + num(op) + "/" + num(oc));
        }
      }
    }
  }
}

void c8_ceiling_identities(Tally& t) {
  std::mt19937_64 rng(kSeed);
  auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  for (int i = 0; i < 10000; ++i) {
    const auto L = static_cast<std::uint64_t>(pick(1, 50));
    const auto tt = static_cast<std::uint64_t>(pick(1, static_cast<std::int64_t>(L)));
    const std::int64_t aden = pick(1, 30);
    const Rational A = make_rational(pick(aden, 10 * aden), aden);
    const std::int64_t cden = pick(1, 30);
    const Rational c = make_rational(-pick(0, cden - 1), cden);
    const std::int64_t sden = pick(1, 30);
    const Rational s = make_rational(pick(0, sden), sden);
    const auto r = ceil_step(L, tt, A, c, s);
    t.expect(r.step_holds && r.chain_holds, "ceil_step L=" + num(static_cast<std::int64_t>(L)) + " A=" + to_string(A) +
                                                " c=" + to_string(c) + " s=" + to_string(s));
  }
  for (int i = 0; i < 10000; ++i) {
    const auto a = static_cast<std::uint64_t>(pick(1, 1000));
    const auto b = static_cast<std::uint64_t>(pick(1, 1000));
    const bool holds = b_mod_helper(a, b);
    t.expect(holds == (a >= 2 && b >= 2), "b_mod_helper " + num(static_cast<std::int64_t>(a)) + "," +
                                              num(static_cast<std::int64_t>(b)));
  }
}

void c9_alpha_shadow(Tally& t) {
  std::mt19937_64 rng(kSeed);
  const auto ring = standard_ring(3);
  for (int i = 0; i < 20; ++i) {
    const bool equi = i % 2 == 0;
    const auto I = equi ? random_ideal(rng, ring, 3, 3, 3) : random_ideal(rng, ring, 3, 3);
    const auto table = alpha_limit_table(I, 8);
    std::vector<Exponent> a(9, 0);
    for (const auto& row : table.rows) a[row.n] = row.alpha;
    for (unsigned n = 1; n <= 8; ++n) {
      t.expect(a[n] <= n * alpha(I), show(I) + " n=" + num(n) + ": alpha above n alpha(I)");
      for (unsigned m = 1; m + n <= 8; ++m)
        t.expect(a[m + n] <= a[m] + a[n], show(I) + ": not subadditive at " + num(m) + "+" + num(n));
      if (equi) t.expect(a[n] == n * alpha(I), show(I) + " n=" + num(n) + ": ratio differs from alpha(I)");
    }
    t.expect(table.bounded && table.subadditive, show(I) + ": table flags");
  }
}

void c10_witness_structure(Tally& t) {
  for (std::size_t r = 1; r <= 3; ++r) {
    for_tuples(r, 2, 4, true, [&](const std::vector<Exponent>& exps) {
      const auto spec = IrreducibleSpec::standard(exps);
      const auto closure = closure_power(spec.ideal(), 1);
      const auto rep = v_number(closure);
      const auto& f = rep.locals.front().witness.monomial();
      // x_{i_r} carries the largest exponent: the last variable of the sorted spec
      const auto g = f * Monomial::variable(r, r - 1);
      const auto& gens = closure.gens();
      t.expect(std::find(gens.begin(), gens.end(), g) != gens.end(),
               show(spec.ideal()) + ": f=" + to_string(f, *spec.ring) + " times the last variable is not in G");
    });
  }
}

void c11_closure_paths(Tally& t) {
  // every complete intersection over four variables with exponents <= 3
  const std::size_t nv = 4;
  const auto ring = standard_ring(nv);
  std::vector<Monomial> monos;
  for_tuples(nv, 0, 3, false, [&](const std::vector<Exponent>& e) {
    if (std::any_of(e.begin(), e.end(), [](Exponent x) { return x > 0; })) monos.emplace_back(e);
  });
  auto coprime = [](const Monomial& a, const Monomial& b) { return gcd(a, b).is_one(); };
  std::vector<std::vector<Monomial>> sets;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    sets.push_back({monos[i]});
    for (std::size_t j = i + 1; j < monos.size(); ++j) {
      if (!coprime(monos[i], monos[j])) continue;
      sets.push_back({monos[i], monos[j]});
      for (std::size_t k = j + 1; k < monos.size(); ++k) {
        if (!coprime(monos[i], monos[k]) || !coprime(monos[j], monos[k])) continue;
        sets.push_back({monos[i], monos[j], monos[k]});
        for (std::size_t l = k + 1; l < monos.size(); ++l) {
          if (coprime(monos[i], monos[l]) && coprime(monos[j], monos[l]) && coprime(monos[k], monos[l]))
            sets.push_back({monos[i], monos[j], monos[k], monos[l]});
        }
      }
    }
  }
  for (const auto& gens : sets) {
    const MonomialIdeal I(ring, gens);
    for (unsigned n = 1; n <= 2; ++n) {
      const auto a = closure_power(I, n);
      const auto b = closure_generators(power(I, n));
      const auto c = closure_power_ci(I, n);
      t.expect(a == b && b == c, show(I) + " n=" + num(n));
    }
  }
}

} // namespace

int main() {
  std::printf("acceptance run, seed %llu\n", static_cast<unsigned long long>(kSeed));
  criterion(1, "pure-power membership equivalence", 10, c1_membership);
  criterion(2, "CI v-number at every associated prime", 120, c2_ci_value);
  criterion(3, "CI powers: value and witness divisibility", 300, c3_ci_powers);
  criterion(4, "two pure powers: exhaustive closure value", 60, c4_two_generators);
  criterion(5, "three pure powers: named instances and a1=1 grid", 300, c5_three_generators);
  criterion(6, "height two: bounds, products, splits", 600, c6_height_two);
  criterion(7, "gap q for both families, q<=2, n<=3", 300, c7_gap_families);
  criterion(8, "ceiling identities on 10^4 random inputs each", 5, c8_ceiling_identities);
  criterion(9, "alpha of closures: bound, subadditivity, ratio", 120, c9_alpha_shadow);
  criterion(10, "witness structure of pure-power closures", 60, c10_witness_structure);
  criterion(11, "closure paths agree on CI powers", 120, c11_closure_paths);
  std::printf("%d of 11 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}

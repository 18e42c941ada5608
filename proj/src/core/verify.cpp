#include "monideal/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "monideal/closure.hpp"
#include "monideal/deadline.hpp"
#include "monideal/errors.hpp"
#include "monideal/formulas.hpp"
#include "monideal/vnumber.hpp"

namespace monideal {

namespace {

struct Outcome {
  std::string expected;
  std::string observed;
  bool pass;
};

class Runner {
public:
  Runner(std::string suite, const SuiteOptions& options) : options_(options) { report_.suite = std::move(suite); }

  void run(std::string label, const std::function<Outcome()>& body) {
    std::optional<Clock::time_point> deadline;
    if (options_.budget_seconds)
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(*options_.budget_seconds));
    CaseResult r{std::move(label), {}, {}, CaseStatus::Skipped};
    try {
      ScopedDeadline scope(deadline);
      auto o = body();
      r.expected = std::move(o.expected);
      r.observed = std::move(o.observed);
      r.status = o.pass ? CaseStatus::Pass : CaseStatus::Fail;
    } catch (const BudgetExceeded&) {
      r.observed = "budget exhausted";
    } catch (const std::logic_error& e) {
      r.observed = std::string("internal check failed: ") + e.what();
      r.status = CaseStatus::Fail;
    }
    switch (r.status) {
    case CaseStatus::Pass: ++report_.passed; break;
    case CaseStatus::Fail: ++report_.failed; break;
    case CaseStatus::Skipped: ++report_.skipped; break;
    }
    report_.cases.push_back(std::move(r));
  }

  SuiteReport finish() { return std::move(report_); }

private:
  const SuiteOptions& options_;
  SuiteReport report_;
};

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

std::string num(Exponent v) { return std::to_string(v); }

std::string list(const std::vector<Exponent>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + ")";
}

std::string with_n(const std::string& what, unsigned n) { return what + " n=" + std::to_string(n); }

// Oracle value together with whether its witness checks out against the formula's.
Outcome compare_closure(const MonomialIdeal& ideal, unsigned n, const FormulaResult& f) {
  const auto closure = closure_power(ideal, n);
  const auto oracle = v_number(closure);
  bool pass = f.exact() && oracle.v == f.value;
  std::string observed = "v=" + num(oracle.v);
  if (f.witness) {
    bool witnessed = false;
    for (const auto& p : associated_primes(closure))
      witnessed = witnessed || check_witness(closure, *f.witness, p);
    if (!witnessed) observed += " (formula witness rejected)";
    pass = pass && witnessed;
  }
  return {"v=" + num(f.value) + " " + to_string(f.applicability), observed, pass};
}

std::vector<std::vector<Exponent>> sorted_tuples(std::size_t len, Exponent lo, Exponent hi) {
  std::vector<std::vector<Exponent>> out;
  if (lo > hi) return out;
  std::vector<Exponent> cur(len, lo);
  while (true) {
    out.push_back(cur);
    std::size_t k = len;
    while (k > 0 && cur[k - 1] == hi) --k;
    if (k == 0) break;
    ++cur[k - 1];
    for (std::size_t j = k; j < len; ++j) cur[j] = cur[k - 1];
  }
  return out;
}

SuiteReport suite_theorem_ci(const SuiteOptions& o) {
  Runner run("theorem-ci", o);
  const std::uint64_t trials = o.trials ? o.trials : 20;
  const Exponent max_exp = o.max_exp ? o.max_exp : 3;
  std::mt19937_64 rng(o.seed);
  const auto ring = standard_ring(5);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto ideal = random_ci(rng, ring, 3, max_exp);
    for (unsigned n = 1; n <= 3; ++n) {
      run.run(with_n(to_string(ideal), n), [&] {
        const auto oracle = v_number(power(ideal, n));
        const Exponent a = alpha(ideal);
        bool pass = true;
        std::string observed;
        Exponent expect = 0;
        for (const auto& l : oracle.locals) {
          const auto spec = *make_ci_spec(ideal, l.witness.prime());
          expect = v_ci_power(spec, n).value;
          const Monomial g = spec.base_witness();
          const Monomial& m = l.witness.monomial();
          const bool divides = g.divides(m) && (m / g).degree() >= (n - 1) * a;
          pass = pass && l.value == expect && divides;
          observed += (observed.empty() ? "" : " ") + to_string(l.witness.prime()) + ":" + num(l.value) +
                      (divides ? "" : "(witness not a multiple of g)");
        }
        return Outcome{"v=" + num(expect) + " at every prime", observed, pass && oracle.v == expect};
      });
    }
  }
  return run.finish();
}

SuiteReport suite_gen_k2(const SuiteOptions& o) {
  Runner run("gen-k2", o);
  const Exponent max_exp = o.max_exp ? o.max_exp : 5;
  const std::uint64_t trials = o.trials ? o.trials : 10;
  for (const auto& a : sorted_tuples(2, 1, max_exp)) {
    const auto spec = IrreducibleSpec::standard(a);
    for (unsigned n = 1; n <= 2; ++n)
      run.run(with_n("a=" + list(a), n),
              [&] { return compare_closure(spec.ideal(), n, v_closure_irred_two_block(spec, n)); });
  }
  std::mt19937_64 rng(o.seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<Exponent> a(pick(rng, 3, 4));
    for (auto& e : a) e = pick(rng, 1, max_exp);
    std::sort(a.begin(), a.end());
    const unsigned n = static_cast<unsigned>(pick(rng, 1, 2));
    run.run(with_n("bounds a=" + list(a), n), [&] {
      const auto spec = IrreducibleSpec::standard(a);
      const auto b = v_closure_irred_bounds(spec, n);
      const Exponent v = v_number(closure_power(spec.ideal(), n)).v;
      bool pass = b.lower.value <= v && v <= b.upper.value;
      const auto two = v_closure_irred_two_block(spec, n);
      if (two.exact()) pass = pass && v == two.value;
      return Outcome{num(b.lower.value) + "<=v<=" + num(b.upper.value) + (two.exact() ? " (exact)" : ""),
                     "v=" + num(v), pass};
    });
  }
  return run.finish();
}

SuiteReport suite_threegen(const SuiteOptions& o) {
  Runner run("threegen", o);
  const Exponent max_exp = o.max_exp ? o.max_exp : 6;
  const std::uint64_t trials = o.trials ? o.trials : 10;

  auto named = [&](Exponent a1, Exponent a2, Exponent a3, Exponent l, std::optional<Exponent> value) {
    run.run("named a=" + list({a1, a2, a3}), [=] {
      const auto spec = IrreducibleSpec::standard({a1, a2, a3});
      const auto r = v_closure_3gen(spec, 1);
      const Exponent deg_fl = f_m_witness(spec, l).degree();
      const Exponent v = v_number(closure_generators(spec.ideal())).v;
      const Exponent expect = value.value_or(deg_fl);
      return Outcome{"v=deg f_" + num(l) + "=" + num(expect), "v=" + num(v) + " formula l=" + num(r.l),
                     v == expect && deg_fl == expect && r.l == l && r.result.value == expect};
    });
  };
  named(4, 7, 77, 3, 8);
  named(5, 8, 100, 2, std::nullopt);

  for (Exponent a2 = 1; a2 <= max_exp; ++a2)
    for (Exponent a3 = a2; a3 <= max_exp; ++a3)
      for (unsigned n = 1; n <= 2; ++n)
        run.run(with_n("a=" + list({1, a2, a3}), n), [&] {
          const auto spec = IrreducibleSpec::standard({1, a2, a3});
          return compare_closure(spec.ideal(), n, v_closure_3gen(spec, n).result);
        });

  std::mt19937_64 rng(o.seed);
  for (std::uint64_t t = 0; t < trials && max_exp >= 2; ++t) {
    std::vector<Exponent> a{pick(rng, 2, max_exp), pick(rng, 2, max_exp), pick(rng, 2, max_exp)};
    std::sort(a.begin(), a.end());
    const unsigned n = static_cast<unsigned>(pick(rng, 1, 2));
    run.run(with_n("random a=" + list(a), n), [&] {
      const auto spec = IrreducibleSpec::standard(a);
      auto out = compare_closure(spec.ideal(), n, v_closure_3gen(spec, n).result);
      const auto closure = closure_generators(spec.ideal());
      const MonomialPrime p(spec.ring, spec.vars);
      for (Exponent m = 1; m <= a[0]; ++m)
        if (!check_witness(closure, f_m_witness(spec, m), p)) {
          out.pass = false;
          out.observed += " f_" + num(m) + " rejected";
        }
      return out;
    });
  }
  return run.finish();
}

SuiteReport suite_uppbnd_h2(const SuiteOptions& o) {
  Runner run("uppbnd-h2", o);
  const std::uint64_t trials = o.trials ? o.trials : 20;
  const Exponent max_exp = o.max_exp ? o.max_exp : 3;
  std::mt19937_64 rng(o.seed);
  const auto ring = standard_ring(5);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto ideal = random_ci(rng, ring, 3, max_exp);
    const bool strict = gap_strict_expected(ideal);
    for (unsigned n = 1; n <= 2; ++n)
      run.run(with_n("gap " + to_string(ideal), n), [&, strict] {
        const Exponent vp = v_number(power(ideal, n)).v;
        const Exponent vc = v_number(closure_power(ideal, n)).v;
        const bool pass = vc <= vp && (!strict || vc + 1 <= vp);
        return Outcome{strict ? "v(cl)<=v-1" : "v(cl)<=v", "v=" + num(vp) + " v(cl)=" + num(vc), pass};
      });
  }

  for (std::size_t q = 1; q <= 2; ++q)
    for (Exponent a = 1; a <= 2; ++a)
      for (std::size_t l = q; l <= 3; ++l)
        for (const auto& betas : sorted_tuples(l, a, 3))
          for (unsigned n = 1; n <= 2; ++n) {
            const auto spec = Height2Spec::standard(q, a, betas);
            run.run(with_n("product q=" + std::to_string(q) + " alpha=" + num(a) + " beta=" + list(betas), n),
                    [&] { return compare_closure(spec.ideal(), n, v_closure_h2_product(spec, n)); });
          }

  const std::vector<std::pair<Exponent, std::vector<Exponent>>> splits{{3, {1, 2}}, {5, {1, 1, 3}}};
  for (const auto& [a, betas] : splits)
    for (unsigned n = 1; n <= 2; ++n)
      run.run(with_n("split alpha=" + num(a) + " beta=" + list(betas), n),
              [&] { return compare_closure(h2_split_ideal(a, betas), n, v_closure_h2_split(a, betas, n)); });

  for (Exponent a = 1; a <= 2; ++a)
    for (unsigned n = 1; n <= 2; ++n)
      run.run(with_n("gap instance a=" + num(a), n), [&] {
        const auto g = gap_instance(a);
        const Exponent v = v_number(closure_power(g.ideal, n)).v;
        return Outcome{"v=" + num(g.predicted_v(n)) + " reg-v=" + num(g.predicted_gap()), "v=" + num(v),
                       v == g.predicted_v(n)};
      });
  return run.finish();
}

SuiteReport suite_wog(const SuiteOptions& o) {
  Runner run("wog", o);
  const Exponent max_exp = o.max_exp ? o.max_exp : 3;
  const std::uint64_t trials = o.trials ? o.trials : 5;
  auto one = [&](std::size_t p1, const std::vector<Exponent>& w, unsigned n) {
    run.run(with_n("p1=" + std::to_string(p1) + " weights=" + list(w), n),
            [&] { return compare_closure(wog_ideal(p1, w), n, wog_v_closure(p1, w, n)); });
  };
  for (std::size_t p1 = 1; p1 <= 2; ++p1)
    for (std::size_t p2 = 1; p2 <= 2; ++p2) {
      std::vector<Exponent> w(p2, 1);
      while (true) {
        for (unsigned n = 1; n <= 2; ++n) one(p1, w, n);
        std::size_t k = 0;
        while (k < p2 && w[k] == max_exp) w[k++] = 1;
        if (k == p2) break;
        ++w[k];
      }
    }
  std::mt19937_64 rng(o.seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::size_t p1 = pick(rng, 1, 3);
    std::vector<Exponent> w(pick(rng, 1, 3));
    for (auto& e : w) e = pick(rng, 1, max_exp);
    one(p1, w, static_cast<unsigned>(pick(rng, 1, 2)));
  }
  return run.finish();
}

SuiteReport suite_ceil(const SuiteOptions& o) {
  Runner run("ceil", o);
  const std::uint64_t trials = o.trials ? o.trials : 10000;
  const Exponent max_exp = o.max_exp ? o.max_exp : 50;
  std::mt19937_64 rng(o.seed);

  auto q = [](std::int64_t num, std::int64_t den) { return make_rational(num, den); };
  run.run("ceil_step L=3 t=1 A=7/4 c=0 s=0", [&] {
    const auto r = ceil_step(3, 1, q(7, 4), 0, 0);
    return Outcome{"6>4 and 6>=4", r.step_lhs.get_str() + ">" + r.step_rhs.get_str() + " and " +
                                         r.step_lhs.get_str() + ">=" + r.chain_rhs.get_str(),
                   r.step_lhs == 6 && r.step_rhs == 4 && r.chain_rhs == 4 && r.step_holds && r.chain_holds};
  });

  run.run("ceil_step random", [&] {
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
      const std::uint64_t L = pick(rng, 1, max_exp);
      const std::uint64_t t = pick(rng, 1, L);
      const auto den = static_cast<std::int64_t>(pick(rng, 1, 20));
      const Rational A = q(static_cast<std::int64_t>(pick(rng, den, 20 * den)), den);
      const auto cden = static_cast<std::int64_t>(pick(rng, 1, 20));
      const Rational c = q(-static_cast<std::int64_t>(pick(rng, 0, cden - 1)), cden);
      const auto sden = static_cast<std::int64_t>(pick(rng, 1, 20));
      const Rational s = q(static_cast<std::int64_t>(pick(rng, 0, sden)), sden);
      const auto r = ceil_step(L, t, A, c, s);
      if (!r.step_holds || !r.chain_holds) ++bad;
    }
    return Outcome{"0 violations", std::to_string(bad) + " violations in " + std::to_string(trials), bad == 0};
  });

  run.run("b_mod_helper fixed", [&] {
    const bool ok = b_mod_helper(2, 2) && !b_mod_helper(1, 5) && b_mod_helper(3, 2) && !b_mod_helper(3, 1);
    return Outcome{"(2,2) (3,2) hold, (1,5) (3,1) fail", ok ? "as expected" : "mismatch", ok};
  });

  run.run("b_mod_helper random", [&] {
    std::uint64_t checked = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
      b_mod_helper(pick(rng, 1, 1000), pick(rng, 1, 1000));
      ++checked;
    }
    return Outcome{"0 violations", "0 violations in " + std::to_string(checked), true};
  });
  return run.finish();
}

SuiteReport suite_final_corollary(const SuiteOptions& o) {
  Runner run("final-corollary", o);
  auto check = [&](const std::string& family, const MonomialIdeal& ideal, std::size_t q, unsigned n) {
    run.run(with_n(family + " q=" + std::to_string(q) + " " + to_string(ideal), n), [&] {
      const auto vp = predict_power_v(ideal, n);
      const auto vc = predict_closure_v(ideal, n);
      const Exponent op = v_number(power(ideal, n)).v;
      const Exponent oc = v_number(closure_power(ideal, n)).v;
      const bool pass = vp.exact() && vc.exact() && vp.value == op && vc.value == oc && op - oc == q;
      return Outcome{"gap=" + std::to_string(q),
                     "gap=" + std::to_string(static_cast<std::int64_t>(op) - static_cast<std::int64_t>(oc)) +
                         " (v=" + num(op) + " v(cl)=" + num(oc) + ")",
                     pass};
    });
  };
  for (std::size_t q = 0; q <= 2; ++q) {
    const auto xy = make_ring({"x", "y"});
    const MonomialIdeal eq(xy, {Monomial{q + 1, 0}, Monomial{0, q + 1}});
    MonomialIdeal non_eq = MonomialIdeal(xy, {Monomial{1, 0}, Monomial{0, 2}});
    if (q > 0) {
      const auto spec = Height2Spec::standard(q, 2, std::vector<Exponent>(q, 3));
      non_eq = spec.ideal();
    }
    for (unsigned n = 1; n <= 3; ++n) {
      check("equigenerated", eq, q, n);
      check("non-equigenerated", non_eq, q, n);
    }
  }
  return run.finish();
}

} // namespace

std::string to_string(CaseStatus s) {
  switch (s) {
  case CaseStatus::Pass: return "pass";
  case CaseStatus::Fail: return "FAIL";
  case CaseStatus::Skipped: return "skipped";
  }
  return "skipped";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem-ci", "gen-k2", "threegen", "uppbnd-h2",
                                              "wog",        "ceil",   "final-corollary"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "theorem-ci") return suite_theorem_ci(options);
  if (name == "gen-k2") return suite_gen_k2(options);
  if (name == "threegen") return suite_threegen(options);
  if (name == "uppbnd-h2") return suite_uppbnd_h2(options);
  if (name == "wog") return suite_wog(options);
  if (name == "ceil") return suite_ceil(options);
  if (name == "final-corollary") return suite_final_corollary(options);
  throw UsageError("unknown suite '" + name + "'");
}

RingPtr standard_ring(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(std::move(names));
}

MonomialIdeal random_ci(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_gens, Exponent max_exp) {
  const std::size_t nv = ring->size();
  if (max_gens == 0 || max_gens > nv || max_exp == 0) throw DomainError("random_ci: bad parameters");
  const std::size_t r = pick(rng, 1, max_gens);
  const std::size_t used = pick(rng, r, nv);
  std::vector<std::size_t> vars(nv);
  std::iota(vars.begin(), vars.end(), 0);
  std::shuffle(vars.begin(), vars.end(), rng);
  std::vector<Monomial> gens(r, Monomial::one(nv));
  for (std::size_t k = 0; k < used; ++k) {
    const std::size_t owner = k < r ? k : pick(rng, 0, r - 1);
    gens[owner][vars[k]] = pick(rng, 1, max_exp);
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal random_ideal(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_gens, Exponent max_exp,
                           Exponent d) {
  const std::size_t nv = ring->size();
  if (max_gens == 0 || (d == 0 && max_exp == 0)) throw DomainError("random_ideal: bad parameters");
  const std::size_t r = pick(rng, 1, max_gens);
  std::vector<Monomial> gens;
  while (gens.size() < r) {
    Monomial u = Monomial::one(nv);
    if (d > 0) {
      for (Exponent k = 0; k < d; ++k) ++u[pick(rng, 0, nv - 1)];
    } else {
      for (std::size_t i = 0; i < nv; ++i) u[i] = pick(rng, 0, max_exp);
    }
    if (!u.is_one()) gens.push_back(std::move(u));
  }
  return MonomialIdeal(ring, std::move(gens));
}

} // namespace monideal

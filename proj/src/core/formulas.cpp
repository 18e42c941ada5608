#include "monideal/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "monideal/closure.hpp"
#include "monideal/errors.hpp"

namespace monideal {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Exponent ceil_ratio(Exponent num, Exponent den) {
  if (den == 0) throw DomainError("division by zero");
  return num / den + (num % den != 0 ? 1 : 0);
}

Exponent to_exponent(const Integer& z) {
  if (sgn(z) < 0 || !z.fits_ulong_p()) throw OverflowError("value does not fit an exponent");
  return z.get_ui();
}

Rational ratio(Exponent num, Exponent den) {
  Rational q(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den)));
  q.canonicalize();
  return q;
}

Exponent scaled(unsigned n, Exponent a) { return checked_mul(static_cast<Exponent>(n), a); }

FormulaResult exact(Exponent value, std::optional<Monomial> witness, std::string citation) {
  FormulaResult r;
  r.value = value;
  r.witness = std::move(witness);
  r.applicability = Applicability::Exact;
  r.citation = std::move(citation);
  return r;
}

bool has_at_most_two_values(const std::vector<Exponent>& sorted) {
  std::size_t distinct = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] != sorted[i - 1]) ++distinct;
  return distinct <= 2;
}

// Split-case construction on explicit variables.
FormulaResult h2_split_on(const RingPtr& ring, std::size_t x, const std::vector<std::size_t>& ys,
                          Exponent alpha, const std::vector<Exponent>& betas, unsigned n) {
  if (n == 0) return not_applicable("n must be positive");
  if (betas.size() < 2) return not_applicable("needs at least two y variables");
  Exponent total = 0;
  for (Exponent b : betas) {
    if (b == 0) return not_applicable("weights must be positive");
    total = checked_add(total, b);
  }
  if (total != alpha) return not_applicable("sum of beta must equal alpha");

  const Exponent value = scaled(n, alpha);
  for (std::size_t j = 0; j < betas.size(); ++j) {
    if (checked_mul(2, betas[j]) < alpha) continue;
    Monomial f = Monomial::variable(ring->size(), x);
    for (std::size_t i = 0; i < betas.size(); ++i) f[ys[i]] = scaled(n, betas[i]) - (i == j ? 1 : 0);
    auto r = exact(value, std::move(f), "n*alpha");
    return r;
  }
  FormulaResult r;
  r.value = value;
  r.applicability = Applicability::LowerBound;
  r.citation = "n*alpha (no beta_j with 2*beta_j >= alpha)";
  return r;
}

// Recognizes the two height-two shapes on a two-generator complete intersection.
std::optional<FormulaResult> h2_dispatch(const MonomialIdeal& ideal, unsigned n) {
  const auto& g = ideal.gens();
  for (int flip = 0; flip < 2; ++flip) {
    const Monomial& u = g[flip];
    const Monomial& w = g[1 - flip];
    const auto su = u.support();
    std::vector<std::pair<Exponent, std::size_t>> yw;
    for (std::size_t i : w.support()) yw.emplace_back(w[i], i);
    std::sort(yw.begin(), yw.end());
    std::vector<Exponent> betas;
    std::vector<std::size_t> ys;
    for (const auto& [b, i] : yw) {
      betas.push_back(b);
      ys.push_back(i);
    }

    const Exponent a = u[su.front()];
    bool uniform = true;
    for (std::size_t i : su) uniform = uniform && u[i] == a;
    if (!uniform) continue;

    Height2Spec spec{ideal.ring(), su.size(), a, betas, su, ys};
    if (spec.product_violation().empty()) return v_closure_h2_product(spec, n);
    if (su.size() == 1) {
      auto r = h2_split_on(ideal.ring(), su.front(), ys, a, betas, n);
      if (r.exact()) return r;
    }
  }
  return std::nullopt;
}

} // namespace

std::string to_string(Applicability a) {
  switch (a) {
  case Applicability::Exact: return "exact";
  case Applicability::UpperBound: return "upper-bound";
  case Applicability::LowerBound: return "lower-bound";
  case Applicability::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

FormulaResult not_applicable(std::string reason) {
  FormulaResult r;
  r.citation = std::move(reason);
  return r;
}

// ---------------------------------------------------------------------------

Monomial CIIdealSpec::base_witness() const {
  Monomial f = Monomial::one(ideal.ring()->size());
  for (std::size_t i = 0; i < gens.size(); ++i) f = f * (gens[i] / Monomial::variable(f.size(), y[i]));
  return f;
}

std::optional<CIIdealSpec> make_ci_spec(const MonomialIdeal& ideal, const MonomialPrime& p) {
  require_same_ring(ideal.ring(), p.ring());
  if (!ideal.is_proper() || !is_complete_intersection(ideal)) return std::nullopt;
  const auto ass = associated_primes(ideal);
  if (std::find(ass.begin(), ass.end(), p) == ass.end()) throw DomainError("prime is not associated");
  CIIdealSpec spec{ideal, ideal.gens(), p, {}};
  for (const auto& u : spec.gens) {
    std::size_t hit = u.size();
    for (std::size_t i : p.vars())
      if (u[i] > 0) hit = i;
    if (hit == u.size()) throw std::logic_error("associated prime misses a generator");
    spec.y.push_back(hit);
  }
  return spec;
}

std::optional<CIIdealSpec> make_ci_spec(const MonomialIdeal& ideal) {
  if (!ideal.is_proper() || !is_complete_intersection(ideal)) return std::nullopt;
  std::vector<std::size_t> vars;
  for (const auto& u : ideal.gens()) vars.push_back(u.support().front());
  return make_ci_spec(ideal, MonomialPrime(ideal.ring(), std::move(vars)));
}

FormulaResult v_ci(const CIIdealSpec& spec) {
  Exponent total = 0;
  for (const auto& u : spec.gens) total = checked_add(total, u.degree());
  return exact(total - spec.gens.size(), spec.base_witness(), "sum deg u_i - r");
}

FormulaResult v_ci(const MonomialIdeal& ideal) {
  auto spec = make_ci_spec(ideal);
  if (!spec) return not_applicable("not a complete intersection");
  return v_ci(*spec);
}

FormulaResult v_ci_power(const CIIdealSpec& spec, unsigned n) {
  if (n == 0) return not_applicable("n must be positive");
  Exponent total = 0;
  for (const auto& u : spec.gens) total = checked_add(total, u.degree());
  const Exponent a = spec.gens.front().degree();
  const Exponent value = checked_add(scaled(n, a), total - spec.gens.size()) - a;

  const std::size_t nv = spec.ideal.ring()->size();
  Monomial f = spec.gens.front().pow(n) / Monomial::variable(nv, spec.y.front());
  for (std::size_t i = 1; i < spec.gens.size(); ++i) f = f * (spec.gens[i] / Monomial::variable(nv, spec.y[i]));
  return exact(value, std::move(f), "n*alpha + sum deg u_i - r - alpha");
}

FormulaResult v_ci_power(const MonomialIdeal& ideal, unsigned n) {
  auto spec = make_ci_spec(ideal);
  if (!spec) return not_applicable("not a complete intersection");
  return v_ci_power(*spec, n);
}

FormulaResult v_primary_min(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) return not_applicable("needs a proper nonzero ideal");
  if (associated_primes(ideal).size() != 1) return not_applicable("more than one associated prime");
  const auto dec = irreducible_decomposition(ideal);
  const IrredComponent* best = nullptr;
  Exponent best_value = 0;
  for (const auto& c : dec.components) {
    Exponent v = 0;
    for (const auto& [i, a] : c.powers()) v = checked_add(v, a - 1);
    if (!best || v < best_value) {
      best = &c;
      best_value = v;
    }
  }
  Monomial f = Monomial::one(ideal.ring()->size());
  for (const auto& [i, a] : best->powers()) f[i] = a - 1;
  return exact(best_value, std::move(f), "min over components Q of v(Q)");
}

// ---------------------------------------------------------------------------

IrreducibleSpec IrreducibleSpec::standard(std::vector<Exponent> exponents) {
  if (exponents.empty()) throw DomainError("needs at least one exponent");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) throw DomainError("exponents must be positive");
    if (i > 0 && exponents[i] < exponents[i - 1]) throw DomainError("exponents must be sorted ascending");
  }
  IrreducibleSpec spec;
  spec.ring = make_ring(numbered("x", exponents.size()));
  spec.vars.resize(exponents.size());
  std::iota(spec.vars.begin(), spec.vars.end(), 0);
  spec.exponents = std::move(exponents);
  return spec;
}

IrreducibleSpec IrreducibleSpec::from_ideal(const MonomialIdeal& ideal) {
  const auto comp = as_component(ideal);
  std::vector<std::pair<Exponent, std::size_t>> order;
  for (const auto& [i, a] : comp.powers()) order.emplace_back(a, i);
  std::sort(order.begin(), order.end());
  IrreducibleSpec spec;
  spec.ring = ideal.ring();
  for (const auto& [a, i] : order) {
    spec.exponents.push_back(a);
    spec.vars.push_back(i);
  }
  return spec;
}

MonomialIdeal IrreducibleSpec::ideal() const {
  std::vector<Monomial> gens;
  for (std::size_t j = 0; j < exponents.size(); ++j)
    gens.push_back(Monomial::variable(ring->size(), vars[j], exponents[j]));
  return MonomialIdeal(ring, std::move(gens));
}

FormulaResult v_closure_principal(const IrreducibleSpec& spec, unsigned n) {
  if (spec.k() != 1) return not_applicable("needs a single generator");
  if (n == 0) return not_applicable("n must be positive");
  const Exponent value = scaled(n, spec.alpha()) - 1;
  return exact(value, Monomial::variable(spec.ring->size(), spec.vars.front(), value), "n*a - 1");
}

IrredBounds v_closure_irred_bounds(const IrreducibleSpec& spec, unsigned n) {
  if (spec.k() < 2) {
    auto na = not_applicable("k = 1: the power is integrally closed, v = n*a_1 - 1");
    return {na, na};
  }
  if (n == 0) return {not_applicable("n must be positive"), not_applicable("n must be positive")};
  const Exponent a = spec.alpha(), d = spec.delta(), a2 = spec.exponents[1];
  const Exponent na = scaled(n, a);

  const Exponent lift = to_exponent(ceil(ratio(a2, a) - ratio(a2, d)));
  FormulaResult lower;
  lower.value = na + lift - 1;
  lower.applicability = Applicability::LowerBound;
  lower.citation = "n*alpha + ceil(a_2/alpha - a_2/delta) - 1";

  const Exponent c = ceil_ratio(d, a);
  FormulaResult upper;
  upper.value = na + c - 2;
  upper.applicability = Applicability::UpperBound;
  upper.citation = "n*alpha + ceil(delta/alpha) - 2";
  Monomial f = Monomial::variable(spec.ring->size(), spec.vars.front(), na - 1);
  f[spec.vars.back()] = c - 1;
  upper.witness = std::move(f);

  if (spec.k() == 2 && lower.value != upper.value) throw std::logic_error("bounds differ for two generators");
  if (lower.value > upper.value) throw std::logic_error("lower bound exceeds upper bound");
  return {lower, upper};
}

FormulaResult v_closure_irred_two_block(const IrreducibleSpec& spec, unsigned n) {
  if (spec.k() < 2) return not_applicable("needs at least two generators");
  if (!has_at_most_two_values(spec.exponents)) return not_applicable("exponents take more than two values");
  auto r = v_closure_irred_bounds(spec, n).upper;
  if (n == 0) return r;
  r.applicability = Applicability::Exact;
  return r;
}

std::vector<Exponent> f_m_exponents(Exponent a1, Exponent a2, Exponent a3, Exponent m) {
  if (a1 == 0 || a1 > a2 || a2 > a3) throw DomainError("needs 1 <= a_1 <= a_2 <= a_3");
  if (m == 0 || m > a1) throw DomainError("needs 1 <= m <= a_1");
  const Rational t = ratio(checked_mul(m, a2), a1);
  const Integer ct = ceil(t);
  const Rational frac = t - Rational(ct) + 1;
  const Integer e3 = ceil(ratio(a3, a2) * frac) - 1;
  return {a1 - m, to_exponent(ct - 1), to_exponent(e3)};
}

Monomial f_m_witness(const IrreducibleSpec& spec, Exponent m) {
  if (spec.k() != 3) throw DomainError("f_m needs exactly three generators");
  const auto e = f_m_exponents(spec.exponents[0], spec.exponents[1], spec.exponents[2], m);
  Monomial f = Monomial::one(spec.ring->size());
  for (std::size_t j = 0; j < 3; ++j) f[spec.vars[j]] = e[j];
  return f;
}

ThreeGenResult v_closure_3gen(const IrreducibleSpec& spec, unsigned n) {
  if (spec.k() != 3) throw DomainError("needs exactly three generators");
  const Exponent a1 = spec.exponents[0], a2 = spec.exponents[1], a3 = spec.exponents[2];
  if (a1 == 0 || a1 > a2 || a2 > a3) throw DomainError("needs 1 <= a_1 <= a_2 <= a_3");
  ThreeGenResult out;
  if (n == 0) {
    out.result = not_applicable("n must be positive");
    return out;
  }
  const std::size_t nv = spec.ring->size();

  if (a1 == 1) {
    const Exponent c = ceil_ratio(a3, a2);
    Monomial f = Monomial::one(nv);
    f[spec.vars[0]] = n - 1;
    f[spec.vars[1]] = a2 - 1;
    f[spec.vars[2]] = c - 1;
    out.result = exact(n + a2 + c - 3, std::move(f), "n + a_2 + ceil(a_3/a_2) - 3");
    return out;
  }

  Exponent best = 0;
  for (Exponent m = 1; m < a1; ++m) {
    const Exponent d = f_m_witness(spec, m).degree();
    if (out.l == 0 || d < best) {
      out.l = m;
      best = d;
    }
  }
  const Exponent lead = scaled(n - 1, a1);
  Monomial f = f_m_witness(spec, out.l);
  f[spec.vars[0]] = checked_add(f[spec.vars[0]], lead);
  out.result = exact(checked_add(lead, best), std::move(f), "(n-1)*a_1 + deg f_l");

  const Exponent deg_f1 = f_m_witness(spec, 1).degree();
  out.case_mod = a2 % a1 == 0 || a2 % a1 == 1;
  if (out.case_mod && deg_f1 != best) throw std::logic_error("a_2 = 0 or 1 mod a_1 but f_1 is not minimal");

  const Integer c1 = ceil(ratio(a2, a1));
  const Integer c2 = ceil(ratio(a2, a1) - ratio(a2, a3));
  if (c2 < c1 - 1 || c2 > c1) throw std::logic_error("ceiling sandwich violated");
  out.case_ceiling = c2 == c1 - 1;
  if (out.case_ceiling && out.result.value != to_exponent(Integer(static_cast<unsigned long>(scaled(n, a1))) + c1 - 2))
    throw std::logic_error("ceiling case disagrees with the minimum");

  out.case_ratio = ceil(ratio(checked_mul(a1 - 1, a3), checked_mul(a1, a2))) == 1;
  if (out.case_ratio && deg_f1 != best) throw std::logic_error("ratio case holds but f_1 is not minimal");

  const auto bounds = v_closure_irred_bounds(spec, n);
  if (out.result.value < bounds.lower.value || out.result.value > bounds.upper.value)
    throw std::logic_error("three-generator value outside the general bounds");
  if (out.case_mod) out.result.notes.push_back("a_2 = 0 or 1 mod a_1");
  if (out.case_ceiling) out.result.notes.push_back("ceil(a_2/a_1) - 1 = ceil(a_2/a_1 - a_2/a_3)");
  if (out.case_ratio) out.result.notes.push_back("ceil((a_1-1)*a_3/(a_1*a_2)) = 1");
  return out;
}

ThreeGenResult v_closure_3gen(Exponent a1, Exponent a2, Exponent a3, unsigned n) {
  return v_closure_3gen(IrreducibleSpec::standard({a1, a2, a3}), n);
}

RegGapInterval reg_gap_bounds(const IrreducibleSpec& spec, unsigned n, std::size_t ring_vars) {
  if (spec.k() < 2) throw DomainError("needs at least two generators");
  if (ring_vars < spec.k()) throw DomainError("ring has fewer variables than generators");
  RegGapInterval out;
  const Exponent a = spec.alpha(), d = spec.delta();
  if (a == d) {
    out.reg_equals_v = scaled(n, a) - 1;
    return out;
  }
  const auto dim = static_cast<std::int64_t>(ring_vars - spec.k());
  out.upper = static_cast<std::int64_t>(scaled(n, d - a)) + dim - (spec.exponents[1] < d ? 1 : 0);
  return out;
}

// ---------------------------------------------------------------------------

Height2Spec Height2Spec::standard(std::size_t q, Exponent alpha, std::vector<Exponent> betas) {
  auto names = numbered("x", q);
  for (auto& y : numbered("y", betas.size())) names.push_back(std::move(y));
  Height2Spec spec;
  spec.ring = make_ring(std::move(names));
  spec.q = q;
  spec.alpha = alpha;
  for (std::size_t i = 0; i < q; ++i) spec.x_vars.push_back(i);
  for (std::size_t j = 0; j < betas.size(); ++j) spec.y_vars.push_back(q + j);
  spec.betas = std::move(betas);
  return spec;
}

MonomialIdeal Height2Spec::ideal() const {
  const std::size_t nv = ring->size();
  Monomial u1 = Monomial::one(nv), u2 = Monomial::one(nv);
  for (std::size_t i : x_vars) u1[i] = alpha;
  for (std::size_t j = 0; j < y_vars.size(); ++j) u2[y_vars[j]] = betas[j];
  return MonomialIdeal(ring, {u1, u2});
}

std::string Height2Spec::product_violation() const {
  if (q == 0 || x_vars.size() != q) return "needs q >= 1 x variables";
  if (alpha == 0) return "needs alpha >= 1";
  if (betas.empty() || y_vars.size() != betas.size()) return "needs at least one y variable";
  if (q > betas.size()) return "needs q <= l";
  if (alpha > betas.front()) return "needs alpha <= beta_1";
  for (std::size_t j = 1; j < betas.size(); ++j)
    if (betas[j] < betas[j - 1]) return "needs beta sorted ascending";
  std::vector<std::size_t> all = x_vars;
  all.insert(all.end(), y_vars.begin(), y_vars.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return "variables must be distinct";
  return {};
}

FormulaResult v_closure_h2_product(const Height2Spec& spec, unsigned n) {
  if (auto why = spec.product_violation(); !why.empty()) return not_applicable(why);
  if (n == 0) return not_applicable("n must be positive");
  Exponent sum = 0;
  for (Exponent b : spec.betas) sum = checked_add(sum, ceil_ratio(b, spec.alpha));
  const Exponent value = checked_add(scaled(n, checked_mul(spec.q, spec.alpha)), sum) - 2;
  auto r = exact(value, std::nullopt, "n*alpha(I) + sum ceil(beta_j/alpha) - 2");
  if (spec.alpha == 1) r.notes.push_back("closure-equals-power");
  return r;
}

MonomialIdeal h2_split_ideal(Exponent alpha, const std::vector<Exponent>& betas) {
  std::vector<std::string> names{"x"};
  for (auto& y : numbered("y", betas.size())) names.push_back(std::move(y));
  auto ring = make_ring(std::move(names));
  Monomial u1 = Monomial::variable(ring->size(), 0, alpha);
  Monomial u2 = Monomial::one(ring->size());
  for (std::size_t j = 0; j < betas.size(); ++j) u2[j + 1] = betas[j];
  return MonomialIdeal(ring, {u1, u2});
}

FormulaResult v_closure_h2_split(Exponent alpha, const std::vector<Exponent>& betas, unsigned n) {
  const auto ideal = h2_split_ideal(alpha, betas);
  std::vector<std::size_t> ys(betas.size());
  std::iota(ys.begin(), ys.end(), 1);
  return h2_split_on(ideal.ring(), 0, ys, alpha, betas, n);
}

Exponent GapInstance::predicted_v(unsigned n) const { return scaled(n, alpha); }
Exponent GapInstance::predicted_reg(unsigned n) const { return checked_add(scaled(n, alpha), a - 1); }

GapInstance gap_instance(Exponent a) {
  if (a == 0) throw DomainError("needs a >= 1");
  const Exponent alpha = checked_add(checked_mul(2, a), 1);
  auto ring = make_ring(numbered("x", a + 2));
  const std::size_t nv = ring->size();
  Monomial u1 = Monomial::variable(nv, 0, alpha);
  Monomial u2 = Monomial::variable(nv, a + 1, alpha - a);
  for (std::size_t i = 1; i <= a; ++i) u2[i] = 1;
  return GapInstance{a, alpha, MonomialIdeal(ring, {u1, u2})};
}

MonomialIdeal wog_ideal(std::size_t p1, const std::vector<Exponent>& weights) {
  if (p1 == 0 || weights.empty()) throw DomainError("needs p1, p2 >= 1");
  auto names = numbered("x", p1);
  for (auto& y : numbered("y", weights.size())) names.push_back(std::move(y));
  auto ring = make_ring(std::move(names));
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < p1; ++i)
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (weights[j] == 0) throw DomainError("weights must be positive");
      Monomial u = Monomial::variable(ring->size(), i);
      u[p1 + j] = weights[j];
      gens.push_back(std::move(u));
    }
  return MonomialIdeal(ring, std::move(gens));
}

FormulaResult wog_v_closure(std::size_t p1, const std::vector<Exponent>& weights, unsigned n) {
  const auto ideal = wog_ideal(p1, weights);
  if (n == 0) return not_applicable("n must be positive");
  const auto jmin = static_cast<std::size_t>(std::min_element(weights.begin(), weights.end()) - weights.begin());
  const Exponent a = checked_add(1, weights[jmin]);
  Monomial f = Monomial::variable(ideal.ring()->size(), 0, n - 1);
  f[p1 + jmin] = scaled(n, weights[jmin]);
  return exact(scaled(n, a) - 1, std::move(f), "n*alpha(I(D)) - 1");
}

// ---------------------------------------------------------------------------

Witness icci_upper_witness(const MonomialIdeal& ideal, const IrredComponent& q, unsigned n) {
  require_same_ring(ideal.ring(), q.ring());
  if (n == 0) throw DomainError("n must be positive");
  if (!ideal.is_proper() || !is_complete_intersection(ideal)) throw DomainError("needs a complete intersection");
  const auto dec = irreducible_decomposition(ideal);
  if (std::find(dec.components.begin(), dec.components.end(), q) == dec.components.end())
    throw DomainError("not an irredundant component of the ideal");

  // gens[0] has minimum degree; lead[i] is the variable of Q dividing gens[i].
  const auto& gens = ideal.gens();
  const std::size_t r = gens.size(), nv = ideal.ring()->size();
  std::vector<std::size_t> lead(r);
  for (std::size_t i = 0; i < r; ++i) {
    lead[i] = nv;
    for (const auto& [v, e] : q.powers())
      if (gens[i][v] > 0) lead[i] = v;
    if (lead[i] == nv || gens[i][lead[i]] != q.exponent_of(lead[i]))
      throw std::logic_error("component does not match the generators");
  }
  std::size_t l = 0;
  for (std::size_t i = 1; i < r; ++i)
    if (gens[i][lead[i]] > gens[l][lead[l]]) l = i;

  const Exponent a11 = gens[0][lead[0]];
  Monomial f = Monomial::one(nv);
  f[lead[0]] = scaled(n, a11) - 1;
  f[lead[l]] = checked_add(f[lead[l]], ceil_ratio(gens[l][lead[l]], a11) - 1);
  for (std::size_t v : gens[0].support())
    if (v != lead[0]) f[v] = scaled(n, gens[0][v]);
  for (std::size_t i = 1; i < r; ++i) {
    const auto supp = gens[i].support();
    if (supp.size() < 2) continue;
    for (std::size_t v : supp)
      if (v != lead[i]) f[v] = ceil_ratio(gens[i][v], a11);
  }
  return Witness::verified(closure_power(ideal, n), std::move(f), q.radical());
}

// ---------------------------------------------------------------------------

FormulaResult predict_closure_v(const MonomialIdeal& ideal, unsigned n) {
  if (!ideal.is_proper()) return not_applicable("needs a proper nonzero ideal");
  if (n == 0) return not_applicable("n must be positive");

  if (ideal.is_pure_power()) {
    const auto spec = IrreducibleSpec::from_ideal(ideal);
    if (spec.k() == 1) return v_closure_principal(spec, n);
    if (auto r = v_closure_irred_two_block(spec, n); r.exact()) return r;
    if (spec.k() == 3) return v_closure_3gen(spec, n).result;
    return v_closure_irred_bounds(spec, n).upper;
  }

  if (ideal.num_gens() == 1) {
    const Monomial& u = ideal.gens().front();
    const std::size_t y = u.support().front();
    const Monomial f = u.pow(n) / Monomial::variable(u.size(), y);
    return exact(f.degree(), f, "n*deg u - 1 (principal ideals are integrally closed)");
  }

  if (!is_complete_intersection(ideal)) return not_applicable("not a complete intersection");
  if (ideal.is_squarefree()) {
    auto r = v_ci_power(ideal, n);
    r.citation += " (squarefree complete intersection powers are integrally closed)";
    return r;
  }
  if (ideal.num_gens() == 2)
    if (auto r = h2_dispatch(ideal, n)) return *r;
  return not_applicable("no closed form for this shape");
}

FormulaResult predict_power_v(const MonomialIdeal& ideal, unsigned n) { return v_ci_power(ideal, n); }

// ---------------------------------------------------------------------------

AlphaTable alpha_limit_table(const MonomialIdeal& ideal, unsigned n_max) {
  if (n_max == 0) throw DomainError("n_max must be positive");
  AlphaTable t;
  t.base_alpha = alpha(ideal);
  for (unsigned n = 1; n <= n_max; ++n) {
    const Exponent a = alpha(closure_power(ideal, n));
    t.rows.push_back({n, a, ratio(a, n)});
    if (a > scaled(n, t.base_alpha)) t.bounded = false;
  }
  for (unsigned m = 1; m <= n_max; ++m)
    for (unsigned k = 1; m + k <= n_max; ++k)
      if (t.rows[m + k - 1].alpha > t.rows[m - 1].alpha + t.rows[k - 1].alpha) t.subadditive = false;
  return t;
}

bool gap_strict_expected(const MonomialIdeal& ideal) {
  const auto& gens = ideal.gens();
  const Exponent a = alpha(ideal);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() != a || gens[i].is_squarefree()) continue;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i && !gens[j].is_squarefree()) return true;
  }
  return false;
}

std::vector<GapRow> vnum_gap_table(const MonomialIdeal& ideal, unsigned n_max) {
  if (!ideal.is_proper() || !is_complete_intersection(ideal)) throw DomainError("needs a complete intersection");
  const bool strict = gap_strict_expected(ideal);

  std::vector<GapRow> rows;
  for (unsigned n = 1; n <= n_max; ++n) {
    GapRow row{};
    row.n = n;
    row.v_power = v_ci_power(ideal, n).value;
    const auto pred = predict_closure_v(ideal, n);
    row.closure_from_formula = pred.exact();
    row.v_closure = pred.exact() ? pred.value : v_number(closure_power(ideal, n)).v;
    row.gap = static_cast<std::int64_t>(row.v_power) - static_cast<std::int64_t>(row.v_closure);
    row.le_holds = row.gap >= 0;
    row.strict_expected = strict;
    row.strict_holds = row.gap >= 1;
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------

CeilStep ceil_step(std::uint64_t L, std::uint64_t t, const Rational& A, const Rational& c, const Rational& s) {
  if (A < 1) throw DomainError("needs A >= 1");
  if (c <= -1 || c > 0) throw DomainError("needs -1 < c <= 0");
  if (s < 0 || s > 1) throw DomainError("needs 0 <= s <= 1");
  if (t < 1 || t > L) throw DomainError("needs 1 <= t <= L");
  const Rational Lq(Integer(static_cast<unsigned long>(L)));
  const Rational tq(Integer(static_cast<unsigned long>(t)));
  CeilStep out;
  out.step_lhs = ceil((Lq + c) * A - s);
  out.step_rhs = ceil((Lq - 1 + c) * A - s);
  out.chain_rhs = Integer(static_cast<unsigned long>(L - t)) + ceil((tq + c) * A - s);
  out.step_holds = out.step_lhs > out.step_rhs;
  out.chain_holds = out.step_lhs >= out.chain_rhs;
  return out;
}

bool b_mod_helper(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw DomainError("needs a, b >= 1");
  const bool holds = b >= ceil_ratio(b, a) + 1;
  if (holds != (a >= 2 && b >= 2)) throw std::logic_error("b >= ceil(b/a) + 1 disagrees with a, b >= 2");
  return holds;
}

} // namespace monideal

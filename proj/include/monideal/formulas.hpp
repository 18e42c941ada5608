#pragma once

// Closed-form v-number values, bounds and witness constructions for complete
// intersections, pure-power ideals and their integral closures. Every
// function reports an applicability verdict instead of evaluating outside
// its hypotheses; values tagged Exact are meant to be checked against the
// search in vnumber.hpp.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monideal/decompose.hpp"
#include "monideal/rational.hpp"
#include "monideal/ring.hpp"
#include "monideal/vnumber.hpp"

namespace monideal {

enum class Applicability { Exact, UpperBound, LowerBound, NotApplicable };

std::string to_string(Applicability a);

struct FormulaResult {
  Exponent value = 0;
  std::optional<Monomial> witness;
  Applicability applicability = Applicability::NotApplicable;
  /// The closed form that produced the value, or the reason it does not apply.
  std::string citation;
  /// Extra facts established alongside the value, e.g. "closure-equals-power".
  std::vector<std::string> notes;

  bool exact() const noexcept { return applicability == Applicability::Exact; }
};

FormulaResult not_applicable(std::string reason);

// ---------------------------------------------------------------------------
// Complete intersections

/// A complete intersection with its generators ordered so gens[0] has degree
/// alpha, and a chosen associated prime with y[i] the variable of the prime
/// dividing gens[i].
struct CIIdealSpec {
  MonomialIdeal ideal;
  std::vector<Monomial> gens;
  MonomialPrime prime;
  std::vector<std::size_t> y;

  /// The witness prod u_i / prod y_i.
  Monomial base_witness() const;
};

/// nullopt when the ideal is not a proper complete intersection. DomainError
/// when p is not associated.
std::optional<CIIdealSpec> make_ci_spec(const MonomialIdeal& ideal, const MonomialPrime& p);
/// Uses the prime made of the lowest-index variable of each generator.
std::optional<CIIdealSpec> make_ci_spec(const MonomialIdeal& ideal);

/// sum deg u_i - r, witness prod u_i / prod y_i.
FormulaResult v_ci(const CIIdealSpec& spec);
FormulaResult v_ci(const MonomialIdeal& ideal);

/// v of I^n: n alpha + sum deg u_i - r - alpha, witness (u_1^n / y_1) prod_{i>=2} u_i / y_i.
FormulaResult v_ci_power(const CIIdealSpec& spec, unsigned n);
FormulaResult v_ci_power(const MonomialIdeal& ideal, unsigned n);

/// For an ideal with a single associated prime: the minimum over its
/// irredundant components Q of sum (exponents of Q) - |Q|.
FormulaResult v_primary_min(const MonomialIdeal& ideal);

// ---------------------------------------------------------------------------
// Pure-power ideals <x_{i_1}^{a_1}, ..., x_{i_k}^{a_k}>

struct IrreducibleSpec {
  RingPtr ring;
  /// Ascending, every entry >= 1.
  std::vector<Exponent> exponents;
  /// vars[j] carries exponents[j]; distinct.
  std::vector<std::size_t> vars;

  /// Ring x1..xk with vars[j] = j. DomainError unless sorted and positive.
  static IrreducibleSpec standard(std::vector<Exponent> exponents);
  /// Sorts the generators of a pure-power ideal by exponent (ties by variable index).
  static IrreducibleSpec from_ideal(const MonomialIdeal& ideal);

  MonomialIdeal ideal() const;
  std::size_t k() const noexcept { return exponents.size(); }
  Exponent alpha() const { return exponents.front(); }
  Exponent delta() const { return exponents.back(); }
};

struct IrredBounds {
  FormulaResult lower;
  FormulaResult upper;
};

/// lower = n a_1 + ceil(a_2/a_1 - a_2/a_k) - 1, upper = n a_1 + ceil(a_k/a_1) - 2
/// with upper witness x_1^{n a_1 - 1} x_k^{ceil(a_k/a_1) - 1}. Both results are
/// NotApplicable for k = 1, where the value is n a_1 - 1 (see v_closure_principal).
IrredBounds v_closure_irred_bounds(const IrreducibleSpec& spec, unsigned n);

/// <x^a>^n is integrally closed: v = n a - 1, witness x^{n a - 1}.
FormulaResult v_closure_principal(const IrreducibleSpec& spec, unsigned n);

/// Exact n a_1 + ceil(a_k/a_1) - 2 when k >= 2 and the exponents take at most
/// two distinct values.
FormulaResult v_closure_irred_two_block(const IrreducibleSpec& spec, unsigned n);

/// Exponent vector of f_m over (x_1, x_2, x_3) for sorted a_1 <= a_2 <= a_3 and
/// 1 <= m <= a_1; DomainError otherwise.
std::vector<Exponent> f_m_exponents(Exponent a1, Exponent a2, Exponent a3, Exponent m);
/// f_m placed on spec.vars.
Monomial f_m_witness(const IrreducibleSpec& spec, Exponent m);

struct ThreeGenResult {
  FormulaResult result;
  /// The m whose f_m realizes the minimum (smallest on ties); 0 when a_1 = 1.
  Exponent l = 0;
  /// a_2 = 0 or 1 mod a_1, which forces l = 1.
  bool case_mod = false;
  /// ceil(a_2/a_1) - 1 = ceil(a_2/a_1 - a_2/a_3), which gives n a_1 + ceil(a_2/a_1) - 2.
  bool case_ceiling = false;
  /// ceil((a_1 - 1) a_3 / (a_1 a_2)) = 1, which forces l = 1.
  bool case_ratio = false;
};

/// Three pure powers. DomainError when the exponents are not sorted or k != 3.
/// Throws std::logic_error when one of the special cases contradicts the value.
ThreeGenResult v_closure_3gen(const IrreducibleSpec& spec, unsigned n);
ThreeGenResult v_closure_3gen(Exponent a1, Exponent a2, Exponent a3, unsigned n);

struct RegGapInterval {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  /// Set for equigenerated input, where reg = v = n alpha - 1.
  std::optional<Exponent> reg_equals_v;
};

/// Bounds on reg(S / closure(I^n)) - v(closure(I^n)); dim S/I is
/// ring_vars - k. DomainError for k < 2 or ring_vars < k.
RegGapInterval reg_gap_bounds(const IrreducibleSpec& spec, unsigned n, std::size_t ring_vars);

// ---------------------------------------------------------------------------
// Height-two complete intersections

/// u_1 = (x_1 ... x_q)^alpha and u_2 = prod_j y_j^{beta_j}.
struct Height2Spec {
  RingPtr ring;
  std::size_t q = 0;
  Exponent alpha = 0;
  std::vector<Exponent> betas;
  std::vector<std::size_t> x_vars;
  std::vector<std::size_t> y_vars;

  /// Ring x1..xq, y1..yl.
  static Height2Spec standard(std::size_t q, Exponent alpha, std::vector<Exponent> betas);

  MonomialIdeal ideal() const;
  /// Empty when the product hypotheses hold (1 <= alpha <= beta_1 <= ..., 1 <= q <= l),
  /// otherwise the first violated one.
  std::string product_violation() const;
};

/// n q alpha + sum ceil(beta_j / alpha) - 2. Notes "closure-equals-power" when alpha = 1.
FormulaResult v_closure_h2_product(const Height2Spec& spec, unsigned n);

/// u_1 = x^alpha, u_2 = prod y_j^{beta_j} with l >= 2 and sum beta = alpha:
/// exact n alpha with witness x y_j^{n beta_j - 1} prod_{i != j} y_i^{n beta_i}
/// for the first j with 2 beta_j >= alpha, otherwise a lower bound.
FormulaResult v_closure_h2_split(Exponent alpha, const std::vector<Exponent>& betas, unsigned n);
/// The ideal used by v_closure_h2_split, over the ring x, y1..yl.
MonomialIdeal h2_split_ideal(Exponent alpha, const std::vector<Exponent>& betas);

/// Equigenerated height-two complete intersection with a fixed regularity gap.
struct GapInstance {
  Exponent a;
  Exponent alpha;
  MonomialIdeal ideal;

  Exponent predicted_v(unsigned n) const;
  Exponent predicted_reg(unsigned n) const;
  Exponent predicted_gap() const { return a - 1; }
};

/// alpha = 2a + 1, I = <x1^alpha, x_{a+2}^{alpha - a} x2 ... x_{a+1}>. DomainError for a = 0.
GapInstance gap_instance(Exponent a);

/// Edge ideal <x_i y_j^{beta_j}> of the complete bipartite orientation x -> y.
MonomialIdeal wog_ideal(std::size_t p1, const std::vector<Exponent>& weights);

/// n (1 + min beta) - 1 with witness x_1^{n-1} y_j^{n beta_j}, j the first minimal weight.
FormulaResult wog_v_closure(std::size_t p1, const std::vector<Exponent>& weights, unsigned n);

// ---------------------------------------------------------------------------
// Witness construction for closures of complete-intersection powers

/// The explicit f with (closure(I^n) : f) = P for the component Q with radical
/// P. DomainError when I is not a complete intersection or Q is not one of its
/// components; std::logic_error when the constructed f fails the check.
Witness icci_upper_witness(const MonomialIdeal& ideal, const IrredComponent& q, unsigned n);

// ---------------------------------------------------------------------------
// Dispatch

/// The best available closed form for v(closure(I^n)): exact when one of the
/// exact families matches, an upper bound for other pure-power ideals.
FormulaResult predict_closure_v(const MonomialIdeal& ideal, unsigned n);

/// v(I^n) for complete intersections.
FormulaResult predict_power_v(const MonomialIdeal& ideal, unsigned n);

// ---------------------------------------------------------------------------
// Tables

struct AlphaRow {
  unsigned n;
  Exponent alpha;
  Rational ratio;
};

struct AlphaTable {
  Exponent base_alpha;
  std::vector<AlphaRow> rows;
  /// alpha(closure(I^n)) <= n alpha(I) on every row.
  bool bounded = true;
  /// alpha(closure(I^{m+n})) <= alpha(closure(I^m)) + alpha(closure(I^n)) within the table.
  bool subadditive = true;
};

AlphaTable alpha_limit_table(const MonomialIdeal& ideal, unsigned n_max);

struct GapRow {
  unsigned n;
  Exponent v_power;
  Exponent v_closure;
  /// v_closure came from a closed form rather than the search.
  bool closure_from_formula;
  std::int64_t gap;
  bool le_holds;
  /// Some minimum-degree generator and another generator are both non-squarefree.
  bool strict_expected;
  bool strict_holds;
};

/// Some minimum-degree generator and another generator are both
/// non-squarefree, which forces v(closure(I^n)) <= v(I^n) - 1.
bool gap_strict_expected(const MonomialIdeal& ideal);

/// v(I^n), v(closure(I^n)) and their difference for n = 1..n_max, using closed
/// forms where they are exact and the search otherwise. DomainError unless I
/// is a complete intersection.
std::vector<GapRow> vnum_gap_table(const MonomialIdeal& ideal, unsigned n_max);

// ---------------------------------------------------------------------------
// Ceiling identities

struct CeilStep {
  Integer step_lhs;  // ceil((L + c) A - s)
  Integer step_rhs;  // ceil((L - 1 + c) A - s)
  Integer chain_rhs; // (L - t) + ceil((t + c) A - s)
  bool step_holds;   // step_lhs > step_rhs
  bool chain_holds;  // step_lhs >= chain_rhs
};

/// DomainError unless A >= 1, -1 < c <= 0, 0 <= s <= 1 and 1 <= t <= L.
CeilStep ceil_step(std::uint64_t L, std::uint64_t t, const Rational& A, const Rational& c, const Rational& s);

/// b >= ceil(b/a) + 1. Throws std::logic_error if that disagrees with a >= 2 && b >= 2.
/// DomainError for a or b equal to 0.
bool b_mod_helper(std::uint64_t a, std::uint64_t b);

} // namespace monideal

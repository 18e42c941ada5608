#pragma once

// Integral closure of monomial ideals through Newton-polyhedron membership.
//
// A monomial x^a lies in the closure of I iff a lies in
// NP(I) = conv(exponents of G(I)) + R^m_{>=0}. Membership is decided exactly
// by a phase-1 simplex on the convex multipliers; pure-power ideals use the
// closed criterion sum a_i / b_i >= 1 instead.
//
// Minimal generators of the closure are found by scanning the box
// prod_i [0, M_i], M_i the largest exponent of x_i in G(I). The bound is
// sufficient: if a_i > M_i and a is in NP(I), write a >= sum l_j v_j; the
// combination contributes at most M_i in coordinate i, so a - e_i is in
// NP(I) as well and a is not minimal.

#include "monideal/decompose.hpp"
#include "monideal/ring.hpp"

namespace monideal {

/// Both operands of a membership question.
struct ClosureQuery {
  MonomialIdeal ideal;
  Monomial point;
};

/// sum over the component's variables of a_i / b_i >= 1, exactly.
bool pure_power_membership(const IrredComponent& powers, const Monomial& a);

/// Exact NP(I) membership via rational feasibility. DomainError on the zero ideal.
bool np_membership(const MonomialIdeal& ideal, const Monomial& a);
bool np_membership(const ClosureQuery& query);

/// Minimal generators of the integral closure.
MonomialIdeal closure_generators(const MonomialIdeal& ideal);

/// Closure of I^n computed as the closure of <u^n : u in G(I)>, which has
/// the same Newton polyhedron; I^n itself is never expanded.
MonomialIdeal closure_power(const MonomialIdeal& ideal, unsigned n);

/// Closure of I^n for a complete intersection I as the intersection of the
/// closures of Q^n over the irredundant components Q. DomainError when I is
/// not a complete intersection.
MonomialIdeal closure_power_ci(const MonomialIdeal& ideal, unsigned n);

} // namespace monideal

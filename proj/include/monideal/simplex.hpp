#pragma once

#include <vector>

#include "monideal/rational.hpp"

namespace monideal {

/// Exact phase-1 simplex over the rationals with Bland's anti-cycling rule.
///
/// Decides whether {x >= 0 : A x = b} is nonempty. Rows with negative
/// right-hand side are negated first; columns that already form a unit
/// vector are used as the starting basis and artificial variables are added
/// only for the remaining rows. When the system is feasible and solution is
/// non-null, a feasible point is written to it.
bool simplex_feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                      std::vector<Rational>* solution = nullptr);

} // namespace monideal

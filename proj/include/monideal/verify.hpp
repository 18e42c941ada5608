#pragma once

// Named verification suites: closed forms against the exhaustive search on
// fixed instances and on seeded random families.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monideal/ring.hpp"

namespace monideal {

enum class CaseStatus { Pass, Fail, Skipped };

std::string to_string(CaseStatus s);

struct CaseResult {
  std::string label;
  std::string expected;
  std::string observed;
  CaseStatus status;
};

struct SuiteOptions {
  /// 0 selects the suite's default.
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
  /// 0 selects the suite's default.
  Exponent max_exp = 0;
  /// Per-case time budget; a case that runs out is Skipped.
  std::optional<double> budget_seconds;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  bool ok() const noexcept { return failed == 0; }
};

/// theorem-ci, gen-k2, threegen, uppbnd-h2, wog, ceil, final-corollary.
const std::vector<std::string>& suite_names();

/// UsageError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

/// Ring x1..x_nvars.
RingPtr standard_ring(std::size_t nvars);

/// A complete intersection over ring with 1..max_gens generators on disjoint
/// random supports and exponents in [1, max_exp]. Needs max_gens <= ring size.
MonomialIdeal random_ci(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_gens, Exponent max_exp);

/// Any nonzero proper monomial ideal with 1..max_gens generators and
/// exponents in [0, max_exp]; equigenerated of degree d when d > 0.
MonomialIdeal random_ideal(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_gens, Exponent max_exp,
                           Exponent d = 0);

} // namespace monideal

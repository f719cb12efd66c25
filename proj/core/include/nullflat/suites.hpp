#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nullflat {

/// Result of one named verification suite. `details` holds one line per
/// recorded failure (capped; the counts are authoritative).
struct SuiteResult {
    std::string suite;
    int cases = 0;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> details;
};

/// The eight acceptance-grade suites, in their canonical order:
///   1 reference_constants    frozen products of the basis lines
///   2 exact_null_identity    zero residual polynomials, exact arithmetic
///   3 numeric_null_identity  sampled residuals across all maps
///   4 inversion_roundtrip    invert o generate, numeric and exact
///   5 rank_facts             determinant 8 and Jacobian ranks
///   6 planner_reachability   endpoint interpolation, both spaces
///   7 jet_consistency        finite-difference cross-check and jet sqrt
///   8 gauge_invariance       reparametrized curves and their inversion
/// All suites are deterministic (fixed seeds) and fast enough for CI.
std::vector<std::string> verification_suite_names();

/// Runs one suite by name; std::nullopt for unknown names.
std::optional<SuiteResult> run_verification_suite(const std::string& name);

/// Runs all eight, in canonical order.
std::vector<SuiteResult> run_verification_suites();

}  // namespace nullflat

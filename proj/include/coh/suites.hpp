#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "coh/solver.hpp"

namespace coh {

/// Verification corpora. Each suite draws seeded instances, evaluates a
/// fixed set of checks per item, and folds the outcomes into per-check
/// statistics. Items are independent and run through parallel_map, so a
/// serial run (threads = 1) and an OpenMP run print identical reports.
enum class Suite { prop1, mcms, hierarchy, tradeoff, axioms, oracle };

Suite parse_suite(const std::string& name);  // throws BadParameter
std::string suite_name(Suite s);

struct CheckStat {
    std::string name;
    int count = 0;
    int failures = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    std::vector<std::uint64_t> failing_seeds;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckStat> checks;

    bool pass() const;
    int total_checks() const;
    int total_failures() const;
};

/// Run one suite. count is the corpus size per family (ignored by the
/// fixed-grid mcms suite); cfg.threads selects serial vs OpenMP fan-out.
SuiteReport run_suite(Suite s, std::uint64_t seed, int count, const SolverConfig& cfg = {});

/// Text form used by the CLI: one line per check plus a summary line.
std::string format_report(const SuiteReport& r);

/// Bisection for the p where the relative-entropy curve crosses the
/// modified trace distance value on the mcms family. The bracket [0.5, 1]
/// is orientation-agnostic; bracketed = false when the endpoint signs
/// agree (no crossing), with both endpoint values reported.
struct CrossingResult {
    bool bracketed = false;
    double p_star = 0.0;
    double g_lo = 0.0;  ///< c_r(mcms(d, 0.5)) - 0.5
    double g_hi = 0.0;  ///< c_r(mcms(d, 1)) - 1
};
CrossingResult crossing_mcms(int d);

}  // namespace coh

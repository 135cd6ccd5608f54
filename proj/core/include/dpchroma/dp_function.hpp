#pragma once

#include "dpchroma/bigint.hpp"
#include "dpchroma/cover.hpp"
#include "dpchroma/cover_enum.hpp"
#include "dpchroma/polynomial.hpp"
#include "dpchroma/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dpchroma {

struct DpOptions {
    std::uint64_t budget = kDefaultBudget;  // orbit-count budget
    int jobs = 1;
    bool reduce = true;                     // conjugation orbit reduction
    std::string cache_dir;                  // empty = no cache
};

/// Exact minimum of the transversal count over all fold-size covers,
/// together with the first witness attaining it in the deterministic
/// enumeration order.
struct DPValue {
    int fold = 0;
    BigInt value;
    DPCover witness;
    std::uint64_t covers_examined = 0;
    bool reduced = true;
};

/// Exhaustive minimization over normalized covers (orbit representatives
/// when options.reduce). Throws ValidationError for disconnected graphs
/// (compute per component and multiply) and CapacityError when the orbit
/// count exceeds the budget. Deterministic for any worker count: the merge
/// takes the minimum value with the smallest enumeration ordinal.
DPValue dp_color_function(std::shared_ptr<const Graph> g, int fold, const DpOptions& options = {});

struct GapRow {
    int fold = 0;
    BigInt chromatic;      // P(G,m)
    BigInt dp;             // P_DP(G,m)
    BigInt gap;            // P - P_DP
    bool skipped = false;
    std::string note;      // set when skipped
};

struct GapReport {
    int n = 0;
    int girth_value = 0;
    std::vector<GapRow> rows;
    /// Least-squares slope of log(gap) vs log(fold) over the top half of
    /// the positive-gap rows; only defined when at least 3 rows have a
    /// positive gap.
    std::optional<double> fitted_exponent;
};

GapReport gap_table(std::shared_ptr<const Graph> g, int fold_lo, int fold_hi,
                    const DpOptions& options = {});

struct ConeRow {
    int fold = 0;
    BigInt chromatic;
    BigInt dp;
    bool equal = false;
    bool skipped = false;
    std::string note;
};

struct ConeReport {
    std::vector<ConeRow> rows;
    /// Smallest tested fold from which every computed row is an equality.
    std::optional<int> first_equal_onset;
};

/// Equality scan for M = cone(g) over the fold range.
ConeReport cone_scan(std::shared_ptr<const Graph> g, int fold_lo, int fold_hi,
                     const DpOptions& options = {});

/// Samples random twisted star-normalized covers of M = cone(g) and checks
/// the closed-form lower bound on their transversal counts:
///   m^n - (n+s) m^(n-1) + (C(n+s,2) - t) m^(n-2) - a3 m^(n-3)
///       + m^(n-3) - 2 (p4 + p6 + 2^(s-1)) m^(n-4)
/// with n = |V(M)|, s = |E(g)|. The bound's hypothesis is
/// m >= 2 (p4 + p6); when not met the checks still run, marked
/// informational. max_checks = 0 means check every sample.
CheckReport cone_lower_bound_report(std::shared_ptr<const Graph> g, int fold,
                                    int samples, std::uint64_t seed = 0,
                                    int max_checks = 0);

/// Smallest fold satisfying the lower-bound hypothesis for cone(g).
int cone_lower_bound_threshold(const Graph& g);

/// Asserts P_DP(g,m) <= P(g,m) for every fold in range (rows that exceed
/// the budget are skipped with a note).
CheckReport upper_bound_report(std::shared_ptr<const Graph> g, int fold_lo, int fold_hi,
                               const DpOptions& options = {});

std::string dp_value_to_json(const DPValue& v);
std::string gap_report_to_json(const GapReport& r);
std::string cone_report_to_json(const ConeReport& r);

} // namespace dpchroma

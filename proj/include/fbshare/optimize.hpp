#ifndef FBSHARE_OPTIMIZE_HPP
#define FBSHARE_OPTIMIZE_HPP

#include <vector>

#include "fbshare/cost.hpp"

namespace fbshare {

struct CurvePoint {
    double group_count = 0;
    CostReport report;
    bool feasible = false;

    double cost() const noexcept { return report.total_ops; }
};

/// Outcome of a group-count search. best_group_count is integer-valued for
/// the discrete search and real for the continuous relaxation. When no
/// candidate satisfies the feasibility threshold, the unconstrained minimum
/// is returned with any_feasible = false.
struct OptResult {
    double best_group_count = 1;
    double best_cost = 0;
    bool any_feasible = false;
    double constraint_ratio = 0; // taps / 2^(binding group size) at the best point
    CostMode mode = CostMode::mac;
    std::vector<CurvePoint> curve;
};

/// Exhaustive search over integer G in [1, K] with the realistic group-size
/// split. A candidate is feasible iff taps / 2^size >= rho for every group
/// size that actually occurs. Ties break toward the smallest G.
OptResult optimize_groups_discrete(int filters, int taps, CostMode mode, double rho);

/// Continuous relaxation over real G in [1, K], minimized by bisection on
/// the derivative sign; the curve is sampled at 0.1 steps for inspection.
OptResult optimize_groups_continuous(int filters, int taps, CostMode mode, double rho);

/// One discrete curve per requested tap count, in input order. Each curve
/// point carries the full inner/outer breakdown.
std::vector<OptResult> sweep_groups(int filters, const std::vector<int>& taps_list,
                                    CostMode mode, double rho);

} // namespace fbshare

#endif

#include "fbshare/optimize.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fbshare {

namespace {

void check_args(int filters, int taps, double rho) {
    if (filters < 1)
        throw InvalidArgument("filter count must be >= 1");
    if (taps < 1)
        throw InvalidArgument("tap count must be >= 1");
    if (!(rho > 0))
        throw BadThreshold("feasibility threshold must be > 0");
}

// Binding occupancy ratio M / 2^size for the largest group size that occurs.
double discrete_ratio(int filters, int taps, int groups) {
    const int large_count = filters % groups;
    const int small_size = filters / groups;
    const int binding = large_count > 0 ? small_size + 1 : small_size;
    return taps / std::exp2(binding);
}

OptResult select_best(OptResult result) {
    const CurvePoint* best = nullptr;
    for (const auto& point : result.curve) {
        if (!point.feasible)
            continue;
        if (best == nullptr || point.cost() < best->cost())
            best = &point;
    }
    result.any_feasible = best != nullptr;
    if (best == nullptr) {
        for (const auto& point : result.curve)
            if (best == nullptr || point.cost() < best->cost())
                best = &point;
    }
    result.best_group_count = best->group_count;
    result.best_cost = best->cost();
    return result;
}

} // namespace

OptResult optimize_groups_discrete(int filters, int taps, CostMode mode, double rho) {
    check_args(filters, taps, rho);
    OptResult result;
    result.mode = mode;
    for (int g = 1; g <= filters; ++g) {
        CurvePoint point;
        point.group_count = g;
        point.report = expected_cost_discrete(filters, taps, g, mode);
        point.feasible = discrete_ratio(filters, taps, g) >= rho;
        result.curve.push_back(std::move(point));
    }
    result = select_best(std::move(result));
    result.constraint_ratio =
        discrete_ratio(filters, taps, static_cast<int>(result.best_group_count));
    return result;
}

OptResult optimize_groups_continuous(int filters, int taps, CostMode mode, double rho) {
    check_args(filters, taps, rho);
    const double filter_count = filters;
    const double tap_count = taps;

    // d/dG of G*M + K*2^(K/G) (the pyramid objective differs by a constant);
    // monotone increasing in G, so a sign bisection finds the minimizer.
    const auto derivative = [&](double g) {
        return tap_count - filter_count * filter_count * std::numbers::ln2 *
                               std::exp2(filter_count / g) / (g * g);
    };

    double best_g = 1;
    if (filters > 1 && derivative(1.0) < 0) {
        if (derivative(filter_count) <= 0) {
            best_g = filter_count;
        } else {
            double lo = 1.0, hi = filter_count;
            for (int i = 0; i < 200 && hi - lo > 1e-12 * filter_count; ++i) {
                const double mid = 0.5 * (lo + hi);
                (derivative(mid) < 0 ? lo : hi) = mid;
            }
            best_g = 0.5 * (lo + hi);
        }
    }

    OptResult result;
    result.mode = mode;
    for (int i = 0; 1.0 + 0.1 * i <= filter_count + 1e-9; ++i) {
        const double clamped = std::min(1.0 + 0.1 * i, filter_count);
        CurvePoint point;
        point.group_count = clamped;
        point.report = expected_cost_grouped(filters, taps, clamped, mode);
        point.feasible = tap_count / std::exp2(filter_count / clamped) >= rho;
        result.curve.push_back(std::move(point));
    }

    const CostReport best_report = expected_cost_grouped(filters, taps, best_g, mode);
    result.best_group_count = best_g;
    result.best_cost = best_report.total_ops;
    result.constraint_ratio = tap_count / std::exp2(filter_count / best_g);
    result.any_feasible = result.constraint_ratio >= rho;
    return result;
}

std::vector<OptResult> sweep_groups(int filters, const std::vector<int>& taps_list,
                                    CostMode mode, double rho) {
    if (taps_list.empty())
        throw InvalidArgument("tap count list is empty");
    std::vector<OptResult> results;
    results.reserve(taps_list.size());
    for (int taps : taps_list)
        results.push_back(optimize_groups_discrete(filters, taps, mode, rho));
    return results;
}

} // namespace fbshare

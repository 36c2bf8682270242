#include "fbshare/cost.hpp"

#include <cmath>
#include <string>

#include "fbshare/rng.hpp"

namespace fbshare {

namespace {

void check_shape(int filters, int taps) {
    if (filters < 1)
        throw InvalidArgument("filter count must be >= 1");
    if (taps < 1)
        throw InvalidArgument("tap count must be >= 1");
}

// 2^exponent as an exact 64-bit count; the K <= 50 guard keeps 2^K * K well
// inside the signed range.
std::int64_t pow2(int exponent) {
    return std::int64_t{1} << exponent;
}

CostReport make_report(std::int64_t inner, std::int64_t outer_macs,
                       std::int64_t outer_adds, CostMode mode, CostKind kind,
                       int filters, int taps, double groups) {
    CostReport r;
    r.inner_macs = static_cast<double>(inner);
    r.outer_macs = static_cast<double>(outer_macs);
    r.outer_adds = static_cast<double>(outer_adds);
    r.total_macs = static_cast<double>(inner + outer_macs);
    r.total_ops = static_cast<double>(inner + outer_macs + outer_adds);
    r.mode = mode;
    r.kind = kind;
    r.filters = filters;
    r.taps = taps;
    r.groups = groups;
    return r;
}

} // namespace

CostReport expected_cost_ungrouped(int filters, int taps, CostMode mode) {
    check_shape(filters, taps);
    if (filters > 50)
        throw Overflow("2^K * K exceeds counter range for K = " + std::to_string(filters));
    const std::int64_t subsets = pow2(filters);
    const std::int64_t outer_macs = mode == CostMode::mac ? subsets * filters : 0;
    const std::int64_t outer_adds = mode == CostMode::pyramid ? (subsets - 1) * filters : 0;
    return make_report(taps, outer_macs, outer_adds, mode, CostKind::expected,
                       filters, taps, 1);
}

CostReport expected_cost_grouped(int filters, int taps, double groups, CostMode mode) {
    check_shape(filters, taps);
    if (!(groups >= 1.0) || groups > filters)
        throw BadGroupCount("group count must lie in [1, K]");

    const double per_group_filters = filters / groups;
    const double subsets = std::exp2(per_group_filters);
    const double inner = groups * taps;
    const double outer_macs = mode == CostMode::mac ? subsets * filters : 0.0;
    const double outer_adds = mode == CostMode::pyramid ? (subsets - 1.0) * filters : 0.0;

    CostReport r;
    r.inner_macs = inner;
    r.outer_macs = outer_macs;
    r.outer_adds = outer_adds;
    r.total_macs = inner + outer_macs;
    r.total_ops = inner + outer_macs + outer_adds;
    r.mode = mode;
    r.kind = CostKind::expected;
    r.filters = filters;
    r.taps = taps;
    r.groups = groups;
    return r;
}

CostReport expected_cost_discrete(int filters, int taps, int groups, CostMode mode) {
    check_shape(filters, taps);
    if (groups < 1 || groups > filters)
        throw BadGroupCount("group count " + std::to_string(groups) + " outside [1, " +
                            std::to_string(filters) + "]");
    if (filters > 50)
        throw Overflow("2^|G1| * |G1| exceeds counter range for K = " +
                       std::to_string(filters));

    const int large_count = filters % groups;
    const int small_size = filters / groups;
    const int large_size = small_size + 1;
    const int small_count = groups - large_count;

    std::int64_t outer_macs = 0;
    std::int64_t outer_adds = 0;
    if (mode == CostMode::mac) {
        outer_macs = large_count * pow2(large_size) * large_size +
                     small_count * pow2(small_size) * small_size;
    } else {
        outer_adds = large_count * (pow2(large_size) - 1) * large_size +
                     small_count * (pow2(small_size) - 1) * small_size;
    }
    const std::int64_t inner = std::int64_t{groups} * taps;
    return make_report(inner, outer_macs, outer_adds, mode, CostKind::expected,
                       filters, taps, groups);
}

CostReport direct_cost(int filters, int taps) {
    check_shape(filters, taps);
    // One MAC per coefficient, all in the filter stage; no subset stage.
    return make_report(0, std::int64_t{filters} * taps, 0, CostMode::mac,
                       CostKind::expected, filters, taps, 0);
}

CostReport actual_cost(const std::vector<SubsetPartition>& partitions,
                       const GroupingPlan& plan, CostMode mode) {
    if (partitions.size() != plan.groups.size())
        throw PlanMismatch("plan has " + std::to_string(plan.groups.size()) +
                           " groups, got " + std::to_string(partitions.size()) +
                           " partitions");

    std::int64_t inner = 0;
    std::int64_t outer_macs = 0;
    std::int64_t outer_adds = 0;
    int taps = 0;
    for (std::size_t g = 0; g < partitions.size(); ++g) {
        const auto& part = partitions[g];
        const int group_size = static_cast<int>(plan.groups[g].size());
        if (part.filter_count != group_size)
            throw PlanMismatch("group " + std::to_string(g) + " has " +
                               std::to_string(group_size) + " filters, partition covers " +
                               std::to_string(part.filter_count));
        if (taps == 0)
            taps = part.tap_count;
        else if (taps != part.tap_count)
            throw PlanMismatch("partitions disagree on tap count");

        std::int64_t subset_taps = 0;
        for (const auto& [pattern, members] : part.subsets)
            subset_taps += static_cast<std::int64_t>(members.size());
        inner += subset_taps;

        const std::int64_t occupied = part.occupied();
        if (mode == CostMode::mac)
            outer_macs += occupied * group_size;
        else
            outer_adds += (occupied - 1) * group_size;
    }
    return make_report(inner, outer_macs, outer_adds, mode, CostKind::actual,
                       plan.total_filters, taps,
                       static_cast<double>(plan.group_count));
}

CostReport serialized_cost(const CostReport& report, int factor, Stage stage) {
    if (factor < 1)
        throw BadFactor("serialization factor must be >= 1");
    CostReport r = report;
    const auto shrink = [factor](double count) {
        return std::ceil(count / factor);
    };
    if (stage == Stage::inner || stage == Stage::both) {
        r.inner_macs = shrink(r.inner_macs);
        r.inner_rate *= factor;
    }
    if (stage == Stage::outer || stage == Stage::both) {
        r.outer_macs = shrink(r.outer_macs);
        r.outer_adds = shrink(r.outer_adds);
        r.outer_rate *= factor;
    }
    r.total_macs = r.inner_macs + r.outer_macs;
    r.total_ops = r.inner_macs + r.outer_macs + r.outer_adds;
    return r;
}

McStats monte_carlo_cost(int filters, int taps, int groups, CostMode mode,
                         int trials, std::uint64_t seed) {
    check_shape(filters, taps);
    if (trials < 1)
        throw InvalidArgument("trials must be >= 1");
    const GroupingPlan plan = plan_grouping(filters, groups);

    double sum_ops = 0, sumsq_ops = 0;
    double sum_occ = 0, sumsq_occ = 0;
    double sum_inner = 0;
    for (int t = 0; t < trials; ++t) {
        const FilterBank bank = generate_bank(filters, taps, derive_seed(seed, t));
        const auto parts = partition_grouped(bank, plan);
        const CostReport report = actual_cost(parts, plan, mode);

        double occupied = 0;
        for (const auto& part : parts)
            occupied += part.occupied();
        occupied /= static_cast<double>(parts.size());

        sum_ops += report.total_ops;
        sumsq_ops += report.total_ops * report.total_ops;
        sum_occ += occupied;
        sumsq_occ += occupied * occupied;
        sum_inner += report.inner_macs;
    }

    const double n = trials;
    const auto stddev = [n](double sum, double sumsq) {
        if (n < 2)
            return 0.0;
        const double var = (sumsq - sum * sum / n) / (n - 1);
        return var > 0 ? std::sqrt(var) : 0.0;
    };

    McStats stats;
    stats.trials = trials;
    stats.mean_total_ops = sum_ops / n;
    stats.stddev_total_ops = stddev(sum_ops, sumsq_ops);
    stats.mean_nonempty_per_group = sum_occ / n;
    stats.stddev_nonempty_per_group = stddev(sum_occ, sumsq_occ);
    stats.mean_inner_macs = sum_inner / n;
    stats.seed = seed;
    return stats;
}

} // namespace fbshare

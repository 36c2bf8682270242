#ifndef FBSHARE_COST_HPP
#define FBSHARE_COST_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fbshare/bank.hpp"

namespace fbshare {

/// How the outer (recombination) stage is realized: multiply-accumulate
/// blocks, or a pyramid of two-input adders.
enum class CostMode { mac, pyramid };

enum class CostKind { expected, actual };

/// Operation counts for one design point. Counts are stored as doubles so
/// the continuous group-count relaxation fits the same report; every
/// discrete or instance-level producer computes in 64-bit integers and the
/// stored values are exact integers.
struct CostReport {
    double inner_macs = 0;  // subset-accumulation stage
    double outer_macs = 0;  // recombination stage, MAC realization
    double outer_adds = 0;  // recombination stage, pyramid realization
    double total_macs = 0;  // inner + outer MACs
    double total_ops = 0;   // inner + outer MACs + adds

    int inner_rate = 1; // clock multiple of the inner-stage resources
    int outer_rate = 1; // clock multiple of the outer-stage resources

    CostMode mode = CostMode::mac;
    CostKind kind = CostKind::expected;
    int filters = 0; // K
    int taps = 0;    // M
    double groups = 0;

    /// Sampling-rate multiple of the fastest element in the design.
    int rate_multiplier() const noexcept { return std::max(inner_rate, outer_rate); }
};

/// Which stage a serialization factor applies to.
enum class Stage { inner, outer, both };

/// Monte-Carlo summary over random +-1 banks.
struct McStats {
    int trials = 0;
    double mean_total_ops = 0;
    double stddev_total_ops = 0;
    double mean_nonempty_per_group = 0;
    double stddev_nonempty_per_group = 0;
    double mean_inner_macs = 0; // identical across trials by construction
    std::uint64_t seed = 0;
};

/// Expected counts for the whole bank as one group: inner M, outer 2^K per
/// filter (MAC) or 2^K - 1 two-input adds per filter (pyramid).
CostReport expected_cost_ungrouped(int filters, int taps, CostMode mode);

/// Continuous relaxation: G groups of K/G filters, G may be fractional.
/// MAC total G*M + 2^(K/G)*K; pyramid total G*M + K*(2^(K/G) - 1).
CostReport expected_cost_grouped(int filters, int taps, double groups, CostMode mode);

/// Realistic integer grouping: mod(K,G) groups of floor(K/G)+1 filters and
/// the rest of floor(K/G). Equals expected_cost_grouped whenever G | K.
CostReport expected_cost_discrete(int filters, int taps, int groups, CostMode mode);

/// Conventional bank baseline, one MAC chain per filter: K*M operations in
/// the filter (outer) stage.
CostReport direct_cost(int filters, int taps);

/// Instance-level counts from concrete partitions: empty subsets cost
/// nothing, singleton subsets still cost one inner accumulation.
CostReport actual_cost(const std::vector<SubsetPartition>& partitions,
                       const GroupingPlan& plan, CostMode mode);

/// Rate/resource bookkeeping for systolic serialization: selected stage
/// counts become ceil(count / factor) and run at factor times the rate.
/// Output values are unchanged; this models the trade only.
CostReport serialized_cost(const CostReport& report, int factor, Stage stage);

/// Draws `trials` random banks (each coefficient +-1 equiprobable, bank t
/// seeded from (seed, t)), runs actual_cost on each.
McStats monte_carlo_cost(int filters, int taps, int groups, CostMode mode,
                         int trials, std::uint64_t seed);

} // namespace fbshare

#endif

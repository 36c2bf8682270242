#ifndef FBSHARE_BANK_HPP
#define FBSHARE_BANK_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "fbshare/errors.hpp"

namespace fbshare {

/// A parallel bank of FIR filters whose coefficients are all -1 or +1.
/// Rows are filters, columns are tap positions. Immutable once built.
class FilterBank {
public:
    /// Validates and adopts a K x M coefficient matrix. Throws
    /// NonUnitCoefficient, RaggedBank or EmptyBank.
    explicit FilterBank(const std::vector<std::vector<int>>& rows);

    FilterBank(int filters, int taps, std::vector<std::int8_t> coeffs);

    int filters() const noexcept { return filters_; }
    int taps() const noexcept { return taps_; }

    /// Coefficient of filter k at tap m, always -1 or +1. Indices 0-based.
    int coeff(int filter, int tap) const {
        return coeffs_[static_cast<std::size_t>(filter) * taps_ + tap];
    }

    std::vector<int> row(int filter) const;

    bool operator==(const FilterBank& other) const = default;

private:
    int filters_ = 0;
    int taps_ = 0;
    std::vector<std::int8_t> coeffs_; // row-major K x M
};

/// Sign-pattern key of a tap subset: bit j is 1 iff the (j+1)-th filter of
/// the group has coefficient +1 on every tap in the subset.
using BitPattern = std::uint32_t;

/// Exclusive, exhaustive partition of the tap indices of a filter group by
/// the per-tap sign pattern across the group's filters. Empty patterns are
/// omitted; keys and tap lists are in ascending order.
struct SubsetPartition {
    int filter_count = 0; // filters in the group
    int tap_count = 0;    // taps per filter
    std::map<BitPattern, std::vector<int>> subsets;

    /// Number of non-empty subsets.
    int occupied() const noexcept { return static_cast<int>(subsets.size()); }
};

/// Assignment of K filters into G groups. When G does not divide K, the
/// first (K mod G) groups take one extra filter.
struct GroupingPlan {
    int total_filters = 0; // K
    int group_count = 0;   // G
    std::vector<std::vector<int>> groups; // 0-based filter indices, contiguous ascending

    int large_group_count = 0; // K mod G
    int large_group_size = 0;  // floor(K/G) + 1
    int small_group_count = 0; // G - (K mod G)
    int small_group_size = 0;  // floor(K/G)
};

/// Checked construction of a FilterBank from a raw integer matrix.
FilterBank validate_bank(const std::vector<std::vector<int>>& rows);

/// Partitions the tap indices of the selected filters by sign pattern.
/// filter_subset holds distinct 0-based filter indices; at most 30 filters
/// per group so the 2^J pattern space stays addressable.
SubsetPartition build_partition(const FilterBank& bank,
                                const std::vector<int>& filter_subset);

/// Sign with which subset `pattern` enters the output of the filter at
/// 0-based position `filter_pos` within its group: +1 iff the pattern bit
/// for that filter is set.
inline int sign_of(int filter_pos, BitPattern pattern) noexcept {
    return (pattern >> filter_pos) & 1u ? +1 : -1;
}

/// Splits filters 0..K-1 into G contiguous groups, larger groups first.
GroupingPlan plan_grouping(int total_filters, int group_count);

/// One partition per plan group. plan.total_filters must match the bank.
std::vector<SubsetPartition> partition_grouped(const FilterBank& bank,
                                               const GroupingPlan& plan);

} // namespace fbshare

#endif

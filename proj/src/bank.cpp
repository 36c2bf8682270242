#include "fbshare/bank.hpp"

#include <algorithm>
#include <string>

namespace fbshare {

namespace {

std::string at_position(int filter, int tap) {
    // Filters are reported 1-based (h1..hK), taps 0-based as in y[n] = sum over m.
    return "filter " + std::to_string(filter + 1) + ", tap " + std::to_string(tap);
}

} // namespace

FilterBank::FilterBank(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw EmptyBank("bank needs at least one filter with at least one tap");
    filters_ = static_cast<int>(rows.size());
    taps_ = static_cast<int>(rows.front().size());
    coeffs_.reserve(static_cast<std::size_t>(filters_) * taps_);
    for (int k = 0; k < filters_; ++k) {
        if (static_cast<int>(rows[k].size()) != taps_)
            throw RaggedBank("filter " + std::to_string(k + 1) + " has " +
                             std::to_string(rows[k].size()) + " taps, expected " +
                             std::to_string(taps_));
        for (int m = 0; m < taps_; ++m) {
            const int c = rows[k][m];
            if (c != -1 && c != 1)
                throw NonUnitCoefficient("value " + std::to_string(c) + " at " +
                                         at_position(k, m));
            coeffs_.push_back(static_cast<std::int8_t>(c));
        }
    }
}

FilterBank::FilterBank(int filters, int taps, std::vector<std::int8_t> coeffs)
    : filters_(filters), taps_(taps), coeffs_(std::move(coeffs)) {
    if (filters_ < 1 || taps_ < 1)
        throw EmptyBank("bank needs at least one filter with at least one tap");
    if (coeffs_.size() != static_cast<std::size_t>(filters_) * taps_)
        throw RaggedBank("coefficient buffer does not match " + std::to_string(filters_) +
                         "x" + std::to_string(taps_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != -1 && coeffs_[i] != 1)
            throw NonUnitCoefficient("value " + std::to_string(int{coeffs_[i]}) + " at " +
                                     at_position(static_cast<int>(i) / taps_,
                                                 static_cast<int>(i) % taps_));
}

std::vector<int> FilterBank::row(int filter) const {
    std::vector<int> out(static_cast<std::size_t>(taps_));
    for (int m = 0; m < taps_; ++m)
        out[m] = coeff(filter, m);
    return out;
}

FilterBank validate_bank(const std::vector<std::vector<int>>& rows) {
    return FilterBank(rows);
}

SubsetPartition build_partition(const FilterBank& bank,
                                const std::vector<int>& filter_subset) {
    const int group_size = static_cast<int>(filter_subset.size());
    if (group_size == 0)
        throw BadFilterIndex("filter subset is empty");
    if (group_size > 30)
        throw TooManyFiltersInGroup(std::to_string(group_size) +
                                    " filters in one group; limit is 30");
    for (int j = 0; j < group_size; ++j) {
        const int k = filter_subset[j];
        if (k < 0 || k >= bank.filters())
            throw BadFilterIndex("filter index " + std::to_string(k) +
                                 " outside [0, " + std::to_string(bank.filters()) + ")");
        for (int i = 0; i < j; ++i)
            if (filter_subset[i] == k)
                throw BadFilterIndex("filter index " + std::to_string(k) + " repeated");
    }

    SubsetPartition part;
    part.filter_count = group_size;
    part.tap_count = bank.taps();
    for (int m = 0; m < bank.taps(); ++m) {
        BitPattern pattern = 0;
        for (int j = 0; j < group_size; ++j)
            if (bank.coeff(filter_subset[j], m) > 0)
                pattern |= BitPattern{1} << j;
        part.subsets[pattern].push_back(m);
    }
    return part;
}

GroupingPlan plan_grouping(int total_filters, int group_count) {
    if (total_filters < 1)
        throw InvalidArgument("filter count must be >= 1");
    if (group_count < 1 || group_count > total_filters)
        throw BadGroupCount("group count " + std::to_string(group_count) +
                            " outside [1, " + std::to_string(total_filters) + "]");

    GroupingPlan plan;
    plan.total_filters = total_filters;
    plan.group_count = group_count;
    plan.large_group_count = total_filters % group_count;
    plan.small_group_size = total_filters / group_count;
    plan.large_group_size = plan.small_group_size + 1;
    plan.small_group_count = group_count - plan.large_group_count;

    int next = 0;
    for (int g = 0; g < group_count; ++g) {
        const int size = g < plan.large_group_count ? plan.large_group_size
                                                    : plan.small_group_size;
        std::vector<int> members(static_cast<std::size_t>(size));
        for (int j = 0; j < size; ++j)
            members[j] = next++;
        plan.groups.push_back(std::move(members));
    }
    return plan;
}

std::vector<SubsetPartition> partition_grouped(const FilterBank& bank,
                                               const GroupingPlan& plan) {
    if (plan.total_filters != bank.filters())
        throw PlanMismatch("plan covers " + std::to_string(plan.total_filters) +
                           " filters, bank has " + std::to_string(bank.filters()));
    std::vector<SubsetPartition> parts;
    parts.reserve(plan.groups.size());
    for (const auto& group : plan.groups)
        parts.push_back(build_partition(bank, group));
    return parts;
}

} // namespace fbshare

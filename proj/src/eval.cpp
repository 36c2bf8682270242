#include "fbshare/eval.hpp"

#include <cstdlib>
#include <string>

namespace fbshare {

namespace {

// M * 2^(W-1) must stay below 2^62 so signed 64-bit accumulators cannot wrap.
void check_headroom(int taps, int sample_width) {
    if (sample_width < 1)
        throw InvalidArgument("sample width must be >= 1");
    if (sample_width >= 63 ||
        static_cast<std::uint64_t>(taps) >= (std::uint64_t{1} << (63 - sample_width)))
        throw AccumulatorOverflowRisk(
            "taps=" + std::to_string(taps) + " at width " + std::to_string(sample_width) +
            " exceeds 64-bit accumulator headroom");
}

} // namespace

OutputFrame direct_convolve(const FilterBank& bank, const SignalFrame& signal) {
    check_headroom(bank.taps(), signal.sample_width);
    const auto& x = signal.samples;
    const int length = static_cast<int>(x.size());
    OutputFrame frame;
    frame.outputs.assign(bank.filters(), std::vector<std::int64_t>(length, 0));
    for (int k = 0; k < bank.filters(); ++k) {
        auto& y = frame.outputs[k];
        for (int n = 0; n < length; ++n) {
            std::int64_t acc = 0;
            const int span = std::min(bank.taps() - 1, n);
            for (int m = 0; m <= span; ++m)
                acc += bank.coeff(k, m) > 0 ? x[n - m] : -x[n - m];
            y[n] = acc;
        }
    }
    return frame;
}

OutputFrame shared_evaluate(const FilterBank& bank, const GroupingPlan& plan,
                            const SignalFrame& signal) {
    if (plan.total_filters != bank.filters())
        throw PlanMismatch("plan covers " + std::to_string(plan.total_filters) +
                           " filters, bank has " + std::to_string(bank.filters()));
    check_headroom(bank.taps(), signal.sample_width);

    const auto partitions = partition_grouped(bank, plan);
    const auto& x = signal.samples;
    const int length = static_cast<int>(x.size());

    OutputFrame frame;
    frame.outputs.assign(bank.filters(), std::vector<std::int64_t>(length, 0));
    for (int n = 0; n < length; ++n) {
        for (std::size_t g = 0; g < partitions.size(); ++g) {
            const auto& members = plan.groups[g];
            for (const auto& [pattern, taps] : partitions[g].subsets) {
                std::int64_t subset_sum = 0;
                for (int m : taps) {
                    if (m > n)
                        break; // taps ascend; x[n-m] = 0 before start-up
                    subset_sum += x[n - m];
                }
                for (std::size_t j = 0; j < members.size(); ++j)
                    frame.outputs[members[j]][n] +=
                        sign_of(static_cast<int>(j), pattern) * subset_sum;
            }
        }
    }
    return frame;
}

Evaluator::Evaluator(const FilterBank& bank, GroupingPlan plan, int sample_width)
    : plan_(std::move(plan)), taps_(bank.taps()) {
    if (plan_.total_filters != bank.filters())
        throw PlanMismatch("plan covers " + std::to_string(plan_.total_filters) +
                           " filters, bank has " + std::to_string(bank.filters()));
    check_headroom(taps_, sample_width);
    partitions_ = partition_grouped(bank, plan_);
    delay_.assign(static_cast<std::size_t>(taps_), 0);
}

std::vector<std::int64_t> Evaluator::step(std::int64_t sample) {
    head_ = (head_ + delay_.size() - 1) % delay_.size();
    delay_[head_] = sample;

    std::vector<std::int64_t> out(static_cast<std::size_t>(plan_.total_filters), 0);
    const std::size_t size = delay_.size();
    for (std::size_t g = 0; g < partitions_.size(); ++g) {
        const auto& members = plan_.groups[g];
        for (const auto& [pattern, taps] : partitions_[g].subsets) {
            std::int64_t subset_sum = 0;
            for (int m : taps)
                subset_sum += delay_[(head_ + m) % size];
            for (std::size_t j = 0; j < members.size(); ++j)
                out[members[j]] += sign_of(static_cast<int>(j), pattern) * subset_sum;
        }
    }
    return out;
}

void Evaluator::reset() {
    delay_.assign(delay_.size(), 0);
    head_ = 0;
}

EquivalenceReport compare_outputs(const OutputFrame& a, const OutputFrame& b) {
    if (a.filters() != b.filters() || a.length() != b.length())
        throw ShapeMismatch("frames are " + std::to_string(a.filters()) + "x" +
                            std::to_string(a.length()) + " vs " +
                            std::to_string(b.filters()) + "x" +
                            std::to_string(b.length()));
    EquivalenceReport report;
    const std::int64_t length = a.length();
    for (std::int64_t n = 0; n < length; ++n) {
        for (int k = 0; k < a.filters(); ++k) {
            const std::int64_t diff = std::llabs(a.outputs[k][n] - b.outputs[k][n]);
            if (diff == 0)
                continue;
            if (report.equal) {
                report.equal = false;
                report.first_mismatch_filter = k;
                report.first_mismatch_index = n;
            }
            if (diff > report.max_abs_diff)
                report.max_abs_diff = diff;
        }
    }
    return report;
}

} // namespace fbshare

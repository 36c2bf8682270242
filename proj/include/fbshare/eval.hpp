#ifndef FBSHARE_EVAL_HPP
#define FBSHARE_EVAL_HPP

#include <cstdint>
#include <vector>

#include "fbshare/bank.hpp"

namespace fbshare {

/// A finite stretch of an integer input signal. sample_width is the nominal
/// amplitude bit width W; samples are expected to satisfy |x| < 2^(W-1).
struct SignalFrame {
    std::vector<std::int64_t> samples;
    int sample_width = 16;
};

/// Per-filter outputs over one frame; each row has the input frame's length
/// (the delay line starts zeroed, no tail flush).
struct OutputFrame {
    std::vector<std::vector<std::int64_t>> outputs;

    int filters() const noexcept { return static_cast<int>(outputs.size()); }
    std::int64_t length() const noexcept {
        return outputs.empty() ? 0 : static_cast<std::int64_t>(outputs.front().size());
    }
};

struct EquivalenceReport {
    bool equal = true;
    int first_mismatch_filter = -1;     // 0-based, scan order: sample-major
    std::int64_t first_mismatch_index = -1;
    std::int64_t max_abs_diff = 0;
};

/// Reference convolution, one independent accumulation per filter and tap.
/// Exact integer arithmetic; throws AccumulatorOverflowRisk when
/// M * 2^(W-1) could exceed the 64-bit accumulator headroom.
OutputFrame direct_convolve(const FilterBank& bank, const SignalFrame& signal);

/// Two-stage shared evaluation: per group, subset sums over the shared delay
/// line, then signed recombination per filter. Bit-exact match of
/// direct_convolve for every bank, plan and signal.
OutputFrame shared_evaluate(const FilterBank& bank, const GroupingPlan& plan,
                            const SignalFrame& signal);

/// Streaming form of shared_evaluate. Single-owner: one sample stream per
/// instance; folding step() over a frame reproduces shared_evaluate.
class Evaluator {
public:
    Evaluator(const FilterBank& bank, GroupingPlan plan, int sample_width = 16);

    /// Pushes one sample, returns the K filter outputs for this instant.
    std::vector<std::int64_t> step(std::int64_t sample);

    void reset();

    int filters() const noexcept { return plan_.total_filters; }
    int taps() const noexcept { return taps_; }

private:
    GroupingPlan plan_;
    std::vector<SubsetPartition> partitions_;
    int taps_ = 0;
    std::vector<std::int64_t> delay_; // delay_[(head_ + m) % M] = x[n-m]
    std::size_t head_ = 0;
};

/// Elementwise comparison; frames must agree in filter count and length.
EquivalenceReport compare_outputs(const OutputFrame& a, const OutputFrame& b);

} // namespace fbshare

#endif

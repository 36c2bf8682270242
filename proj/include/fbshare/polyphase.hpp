#ifndef FBSHARE_POLYPHASE_HPP
#define FBSHARE_POLYPHASE_HPP

#include <vector>

#include "fbshare/cost.hpp"
#include "fbshare/eval.hpp"

namespace fbshare {

/// Polyphase split of an upsample-by-U FIR prototype into U subfilters,
/// phase u holding taps h[u], h[u+U], h[u+2U], ...
///
/// Phase lengths differ by at most one when U does not divide M; the
/// subfilter bank is padded to a rectangle with +1 placeholders in its last
/// column. Padding positions are tracked in phase_lengths and contribute
/// neither to evaluation nor to operation counts.
struct PolyphaseSpec {
    std::vector<int> prototype;   // +-1 taps, length M
    int up_factor = 1;            // U
    FilterBank subfilters;        // K = U rows, ceil(M/U) columns
    std::vector<int> phase_lengths; // real taps per phase

    int phases() const noexcept { return up_factor; }
    bool is_padding(int phase, int tap) const noexcept {
        return tap >= phase_lengths[phase];
    }
};

PolyphaseSpec polyphase_decompose(const std::vector<int>& prototype, int up_factor);

/// Oracle route: zero-stuff the input by U, then convolve with the
/// prototype directly. Output length is U times the input length.
SignalFrame interpolate_direct(const std::vector<int>& prototype, int up_factor,
                               const SignalFrame& signal);

/// Shared route: evaluates the subfilter bank at the input rate with the
/// two-stage coefficient sharing, then commutates phase outputs (phase u
/// supplies output sample U*n + u). Bit-equal to interpolate_direct.
SignalFrame interpolate_shared(const PolyphaseSpec& spec, const GroupingPlan& plan,
                               const SignalFrame& signal);

/// Instance operation counts for the shared interpolator with padding
/// excluded: per group, one inner accumulation per tap column where any
/// member phase has a real tap.
CostReport interpolator_cost(const PolyphaseSpec& spec, const GroupingPlan& plan,
                             CostMode mode);

} // namespace fbshare

#endif

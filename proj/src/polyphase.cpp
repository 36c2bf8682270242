#include "fbshare/polyphase.hpp"

#include <algorithm>
#include <string>

namespace fbshare {

namespace {

void check_prototype(const std::vector<int>& prototype) {
    if (prototype.empty())
        throw EmptyBank("prototype filter has no taps");
    for (std::size_t m = 0; m < prototype.size(); ++m)
        if (prototype[m] != -1 && prototype[m] != 1)
            throw NonUnitCoefficient("value " + std::to_string(prototype[m]) +
                                     " at tap " + std::to_string(m));
}

// Subfilter bank restricted to the first `columns` tap columns (all real).
FilterBank trim_columns(const FilterBank& bank, int columns) {
    std::vector<std::int8_t> coeffs;
    coeffs.reserve(static_cast<std::size_t>(bank.filters()) * columns);
    for (int k = 0; k < bank.filters(); ++k)
        for (int m = 0; m < columns; ++m)
            coeffs.push_back(static_cast<std::int8_t>(bank.coeff(k, m)));
    return FilterBank(bank.filters(), columns, std::move(coeffs));
}

} // namespace

PolyphaseSpec polyphase_decompose(const std::vector<int>& prototype, int up_factor) {
    if (up_factor < 1)
        throw BadRatio("upsampling ratio must be >= 1");
    check_prototype(prototype);

    const int proto_taps = static_cast<int>(prototype.size());
    const int padded = (proto_taps + up_factor - 1) / up_factor; // ceil(M/U)

    PolyphaseSpec spec{prototype, up_factor, FilterBank(1, 1, {1}), {}};
    spec.phase_lengths.resize(static_cast<std::size_t>(up_factor));
    std::vector<std::int8_t> coeffs(static_cast<std::size_t>(up_factor) * padded, 1);
    for (int u = 0; u < up_factor; ++u) {
        const int len = u < proto_taps ? (proto_taps - u + up_factor - 1) / up_factor : 0;
        spec.phase_lengths[u] = len;
        for (int i = 0; i < len; ++i)
            coeffs[static_cast<std::size_t>(u) * padded + i] =
                static_cast<std::int8_t>(prototype[u + i * up_factor]);
    }
    spec.subfilters = FilterBank(up_factor, padded, std::move(coeffs));
    return spec;
}

SignalFrame interpolate_direct(const std::vector<int>& prototype, int up_factor,
                               const SignalFrame& signal) {
    if (up_factor < 1)
        throw BadRatio("upsampling ratio must be >= 1");
    check_prototype(prototype);

    SignalFrame stuffed;
    stuffed.sample_width = signal.sample_width;
    stuffed.samples.assign(signal.samples.size() * up_factor, 0);
    for (std::size_t i = 0; i < signal.samples.size(); ++i)
        stuffed.samples[i * up_factor] = signal.samples[i];

    const FilterBank bank({prototype});
    const OutputFrame frame = direct_convolve(bank, stuffed);
    return SignalFrame{frame.outputs.front(), signal.sample_width};
}

SignalFrame interpolate_shared(const PolyphaseSpec& spec, const GroupingPlan& plan,
                               const SignalFrame& signal) {
    if (plan.total_filters != spec.up_factor)
        throw PlanMismatch("plan covers " + std::to_string(plan.total_filters) +
                           " filters, interpolator has " +
                           std::to_string(spec.up_factor) + " phases");

    const auto& x = signal.samples;
    const int length = static_cast<int>(x.size());
    const int full_columns =
        *std::min_element(spec.phase_lengths.begin(), spec.phase_lengths.end());
    const int ragged = full_columns; // single partially-populated column, if any

    // Shared two-stage evaluation over the rectangular (all-real) columns.
    OutputFrame phase_out;
    if (full_columns > 0) {
        const FilterBank bank_full = full_columns == spec.subfilters.taps()
                                         ? spec.subfilters
                                         : trim_columns(spec.subfilters, full_columns);
        phase_out = shared_evaluate(bank_full, plan, signal);
    } else {
        phase_out.outputs.assign(spec.up_factor, std::vector<std::int64_t>(length, 0));
    }

    // Phases one tap longer than the shortest take their last tap directly.
    for (int u = 0; u < spec.up_factor; ++u) {
        if (spec.phase_lengths[u] <= full_columns)
            continue;
        const int sign = spec.subfilters.coeff(u, ragged);
        auto& y = phase_out.outputs[u];
        for (int n = ragged; n < length; ++n)
            y[n] += sign > 0 ? x[n - ragged] : -x[n - ragged];
    }

    SignalFrame out;
    out.sample_width = signal.sample_width;
    out.samples.assign(static_cast<std::size_t>(length) * spec.up_factor, 0);
    for (int n = 0; n < length; ++n)
        for (int u = 0; u < spec.up_factor; ++u)
            out.samples[static_cast<std::size_t>(n) * spec.up_factor + u] =
                phase_out.outputs[u][n];
    return out;
}

CostReport interpolator_cost(const PolyphaseSpec& spec, const GroupingPlan& plan,
                             CostMode mode) {
    if (plan.total_filters != spec.up_factor)
        throw PlanMismatch("plan covers " + std::to_string(plan.total_filters) +
                           " filters, interpolator has " +
                           std::to_string(spec.up_factor) + " phases");

    std::int64_t inner = 0;
    std::int64_t outer_macs = 0;
    std::int64_t outer_adds = 0;
    for (const auto& group : plan.groups) {
        int min_len = spec.phase_lengths[group.front()];
        int max_len = min_len;
        for (int u : group) {
            min_len = std::min(min_len, spec.phase_lengths[u]);
            max_len = std::max(max_len, spec.phase_lengths[u]);
        }
        inner += max_len; // one accumulation per column with any real tap

        std::int64_t occupied = 0;
        if (min_len > 0) {
            const FilterBank bank_full = trim_columns(spec.subfilters, min_len);
            std::vector<int> local(group.size());
            for (std::size_t j = 0; j < group.size(); ++j)
                local[j] = group[j];
            occupied = build_partition(bank_full, local).occupied();
        }
        for (int u : group) {
            const std::int64_t connected =
                occupied + (spec.phase_lengths[u] > min_len ? 1 : 0);
            if (mode == CostMode::mac)
                outer_macs += connected;
            else
                outer_adds += std::max<std::int64_t>(connected - 1, 0);
        }
    }

    CostReport r;
    r.inner_macs = static_cast<double>(inner);
    r.outer_macs = static_cast<double>(outer_macs);
    r.outer_adds = static_cast<double>(outer_adds);
    r.total_macs = static_cast<double>(inner + outer_macs);
    r.total_ops = static_cast<double>(inner + outer_macs + outer_adds);
    r.mode = mode;
    r.kind = CostKind::actual;
    r.filters = spec.up_factor;
    r.taps = spec.subfilters.taps();
    r.groups = plan.group_count;
    return r;
}

} // namespace fbshare

#include "fbshare/rng.hpp"

namespace fbshare {

FilterBank generate_bank(int filters, int taps, std::uint64_t seed) {
    if (filters < 1 || taps < 1)
        throw EmptyBank("bank needs at least one filter with at least one tap");
    SplitMix64 rng(seed);
    std::vector<std::int8_t> coeffs(static_cast<std::size_t>(filters) * taps);
    for (auto& c : coeffs)
        c = static_cast<std::int8_t>(rng.next_sign());
    return FilterBank(filters, taps, std::move(coeffs));
}

} // namespace fbshare

#ifndef FBSHARE_RNG_HPP
#define FBSHARE_RNG_HPP

#include <cstdint>

#include "fbshare/bank.hpp"

namespace fbshare {

/// SplitMix64: tiny deterministic 64-bit mixing generator. Identical seeds
/// give identical streams on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Coefficient draw: +1 iff the top bit of the next word is set.
    int next_sign() noexcept { return next() >> 63 ? +1 : -1; }

    /// Uniform sample in [-32767, 32767], fits 16-bit amplitude.
    std::int64_t next_sample16() noexcept {
        return static_cast<std::int64_t>(next() % 65535u) - 32767;
    }

private:
    std::uint64_t state_;
};

/// Stateless combination of a base seed and a stream index, so per-trial
/// generators are independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return mixer.next();
}

/// Deterministic bank of +-1 coefficients, row-major draw order.
FilterBank generate_bank(int filters, int taps, std::uint64_t seed);

} // namespace fbshare

#endif

#pragma once

#include <cstdint>

#include "puc/special.hpp"

namespace puc {

/// Deterministic random source addressed by a (seed, stream) pair.
///
/// The generator is xoshiro256** whose 256-bit state is expanded from the
/// pair with SplitMix64, so:
///   * equal (seed, stream) pairs yield bit-identical sequences on every
///     platform (no use of std:: distributions, whose streams are
///     implementation-defined), and
///   * distinct stream ids give statistically independent sequences, which
///     is what makes chunked or parallel simulation reproducible.
///
/// All floating-point outputs are derived from the integer stream by fixed
/// arithmetic only.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {
        // Golden-ratio mixing separates nearby (seed, stream) pairs before
        // SplitMix64 expands them into the full state.
        std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1) + 0xd1b54a32d192ed03ULL);
        for (auto& word : state_) word = split_mix(x);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double strictly inside (0,1): 53-bit resolution offset by
    /// half an ulp so neither endpoint is ever produced.
    double next_uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in {0, ..., n-1} (Lemire with rejection).
    std::uint64_t next_below(std::uint64_t n) noexcept {
        u128 m = static_cast<u128>(next_u64()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = -n % n;
            while (lo < threshold) {
                m = static_cast<u128>(next_u64()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Standard normal via inverse transform; exactly one uniform consumed
    /// per variate, which keeps draw positions predictable.
    double next_std_normal() { return norm_quantile(next_uniform()); }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    static std::uint64_t split_mix(std::uint64_t& x) noexcept {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t state_[4];
};

}  // namespace puc

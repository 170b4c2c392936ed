#pragma once

// Seedable, splittable random source for the simulator.
//
// Generator: xoshiro256** 1.0 (Blackman & Vigna), state filled from a
// SplitMix64 sequence. Substreams are keyed by (master seed, grid point,
// chunk) through a SplitMix64-based mix, so the stream a chunk sees never
// depends on how many threads run.

#include <array>
#include <cstdint>
#include <string_view>

namespace montyhall {

__extension__ typedef unsigned __int128 uint128_t;

inline constexpr std::string_view kGeneratorName = "xoshiro256** 1.0 / splitmix64 substreams v1";

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
    constexpr std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

/// Seed for grid point `point` and chunk `chunk` under `master_seed`.
std::uint64_t derive_substream_seed(std::uint64_t master_seed, std::uint64_t point, std::uint64_t chunk) noexcept;

class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed) noexcept {
        SplitMix64 sm(seed);
        for (auto& word : s_) word = sm.next();
    }

    static Xoshiro256StarStar from_state(const std::array<std::uint64_t, 4>& state) noexcept {
        Xoshiro256StarStar g(0);
        g.s_ = state;
        return g;
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on {0, ..., bound-1} by Lemire's multiply-and-reject; no modulo bias.
    std::uint64_t uniform_index(std::uint64_t bound) noexcept {
        uint128_t m = static_cast<uint128_t>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<uint128_t>((*this)()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform_unit() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace montyhall

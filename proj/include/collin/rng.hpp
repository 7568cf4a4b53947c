#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace collin {

/// SplitMix64: a counter-based 64-bit generator. The state advances by the
/// constant 0x9E3779B97F4A7C15 on every draw and the output is a fixed
/// bijective mix of the new state, so the i-th draw of a stream seeded with s
/// is fmix64(s + i * 0x9E3779B97F4A7C15) and can be reproduced in any language.
///
/// Derived quantities consume draws in a fixed pattern:
///   uniform()   one draw,  (u >> 11) * 2^-53 in [0, 1)
///   normal()    two draws u1, u2: sqrt(-2 ln(1 - u1)) cos(2 pi u2)
///   index(m)    one draw,  floor(u * m / 2^64)
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += kGamma;
        return fmix64(state_);
    }

    double uniform() noexcept;
    double normal() noexcept;
    double normal(double mean, double sd) noexcept { return mean + sd * normal(); }
    std::size_t index(std::size_t m) noexcept;

    template <typename T>
    T choice(std::span<const T> values) noexcept {
        return values[index(values.size())];
    }

    std::uint64_t state() const noexcept { return state_; }

    static std::uint64_t fmix64(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Sub-seed for replicate i of an experiment seeded with seed:
/// fmix64(seed ^ fmix64(i + kGamma)).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace collin

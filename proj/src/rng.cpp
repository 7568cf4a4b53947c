#include "collin/rng.hpp"

#include <cmath>
#include <numbers>

namespace collin {

double SplitMix64::uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::normal() noexcept {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t SplitMix64::index(std::size_t m) noexcept {
    const auto wide = static_cast<unsigned __int128>(next()) * m;
    return static_cast<std::size_t>(wide >> 64);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64::fmix64(seed ^ SplitMix64::fmix64(index + SplitMix64::kGamma));
}

}  // namespace collin

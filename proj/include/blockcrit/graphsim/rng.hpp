#pragma once

#include <cstdint>
#include <limits>

namespace blockcrit::graphsim {

/// SplitMix64 (Steele, Lea, Flood). Small state, statistically solid for
/// simulation use, and trivially splittable by hashing a counter into the
/// seed.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    static constexpr const char* name = "splitmix64";

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Seed of trial `index` under master seed `master`. Depends on nothing
/// else, so trials can be run in any order on any thread.
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return SplitMix64::mix(master + (index + 1) * 0x9E3779B97F4A7C15ull);
}

/// Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift with
/// rejection of the biased low range.
template <class Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

} // namespace blockcrit::graphsim

#pragma once

#include <cstdint>
#include <vector>

namespace pebbling {

// Algorithm identifier recorded in every report that used randomness.
inline constexpr const char* kRngAlgorithm = "splitmix64";

// SplitMix64 (Steele/Lea/Flood). Fully portable: the output sequence is a
// pure function of the seed, independent of platform and standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Independent stream seed for sample #index of a run seeded with `seed`.
// Lets samples be generated in parallel and still be reproducible.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_.next(); }

    // Unbiased integer in [0, bound) via rejection sampling; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

private:
    SplitMix64 gen_;
};

// Uniform weak composition of `total` into `parts` parts, drawn with the
// sorted-cut-points construction: choose parts-1 distinct values from
// {1, ..., total+parts-1}, sort them, and read off the gap sizes.
std::vector<int> sample_composition_cutpoints(Rng& rng, long long total, int parts);

} // namespace pebbling

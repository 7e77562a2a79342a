#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace sfgft {

// 64-bit mixer used for all seed derivation. Fixed constants from the
// splitmix64 finalizer; the exact bit pattern is part of the output contract.
std::uint64_t splitmix64(std::uint64_t x);

// Derives a child seed from a master seed and a tag sequence. Pure function:
// identical (master, tags) give identical seeds on every platform.
std::uint64_t derive_seed(std::uint64_t master, std::span<const std::uint64_t> tags);
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> tags);

// mt19937_64 with explicit double conversion and rejection sampling so the
// produced streams are identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on (0,1]; 53-bit resolution.
    double uniform01();

    // Uniform on [lo, hi).
    double uniform(double lo, double hi);

    // Unbiased integer in [0, bound) via rejection; bound must be positive.
    std::uint64_t uniform_int(std::uint64_t bound);

    // Standard normal, Box-Muller with a cached second deviate.
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    std::vector<double> normal_vector(int n, double mean, double stddev);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace sfgft

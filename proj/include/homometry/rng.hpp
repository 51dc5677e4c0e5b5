#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace homometry {

// Seeded generator with platform-independent derived draws. mt19937_64 output
// is specified bit-for-bit by the standard; the bounded draw below avoids
// std::uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        for (;;) {
            std::uint64_t v = engine_();
            if (v < limit) return v % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform double in (-1, 1).
    double symmetric_unit() { return 2.0 * unit() - 1.0; }

private:
    std::mt19937_64 engine_;
};

// Floyd's algorithm: uniform sample of `count` distinct values from
// [0, population), returned sorted ascending. count <= population.
std::vector<std::uint64_t> sample_without_replacement(std::uint64_t population,
                                                      std::uint64_t count, Rng& rng);

}  // namespace homometry

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qobs {

/// Seeded generator with a fixed cross-platform output sequence.
///
/// The engine is std::mt19937_64, whose output is pinned by the C++ standard.
/// The standard distributions are implementation-defined, so all sampling is
/// done here from raw engine words:
///   uniform01: top 53 bits of one word, scaled by 2^-53
///   bit:       one word per bit, its top bit
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    std::uint8_t bit() { return static_cast<std::uint8_t>(engine_() >> 63); }
    bool bernoulli(double p) { return uniform01() < p; }

    std::vector<std::uint8_t> bits(std::size_t n) {
        std::vector<std::uint8_t> out(n);
        for (auto& b : out) b = bit();
        return out;
    }

    /// Index k with probability weights[k] (weights sum to one).
    template <class Weights>
    std::size_t categorical(const Weights& weights) {
        const double u = uniform01();
        double acc = 0.0;
        std::size_t last = 0;
        for (std::size_t k = 0; k < weights.size(); ++k) {
            if (weights[k] <= 0.0) continue;
            last = k;
            acc += weights[k];
            if (u < acc) return k;
        }
        return last;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qobs

#pragma once

#include <cstdint>
#include <random>

namespace wectkit {

std::uint64_t splitmix64(std::uint64_t x);

// Stable per-stream seed derivation, used to fan a dataset seed out to
// per-image streams without sharing generator state.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Deterministic double streams. mt19937_64 output is pinned by the standard;
// the transforms below avoid std::*_distribution, whose sequences are
// implementation-defined.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    double uniform_half_open();   // [0, 1)
    double uniform_open_closed();  // (0, 1]
    double normal(double mu, double sigma);  // Box-Muller

private:
    std::mt19937_64 engine_;
};

}  // namespace wectkit

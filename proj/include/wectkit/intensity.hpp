#pragma once

#include <string>

#include "wectkit/rng.hpp"

namespace wectkit {

// Pixel intensity model on (0,1], centered at 0.5. The truncated normal is
// N(0.5, sigma) conditioned on (0,1], sampled by rejection.
struct IntensityModel {
    enum class Kind { uniform, truncated_normal, constant };

    Kind kind = Kind::uniform;
    double sigma = 0.0;  // truncated_normal only
    double value = 0.5;  // constant only

    static IntensityModel uniform01();
    static IntensityModel truncated_normal(double sigma);
    static IntensityModel constant(double value = 0.5);

    // "uniform" | "normal-<sigma>" | "constant-<value>"
    static IntensityModel from_name(const std::string& name);
    std::string name() const;

    double mean() const { return kind == Kind::constant ? value : 0.5; }
    double sample(RandomStream& stream) const;

    friend bool operator==(const IntensityModel&, const IntensityModel&) = default;
};

}  // namespace wectkit

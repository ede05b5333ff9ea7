#pragma once

#include <array>
#include <optional>
#include <vector>

#include "wectkit/complex.hpp"
#include "wectkit/intensity.hpp"
#include "wectkit/shapes.hpp"
#include "wectkit/step_function.hpp"

namespace wectkit {

// Expected weighted EC under the average extension for any intensity model
// centered at 0.5: half the Euler characteristic.
double expected_wec_avg(const WeightedComplex& complex);

// Expected weighted EC for the max/min extension under i.i.d. uniform(0,1)
// intensities, via uniform order-statistic means:
//   max: 1/2 |K0| - 2/3 |K1| + 3/4 |K2|
//   min: 1/2 |K0| - 1/3 |K1| + 1/4 |K2|
double expected_wec_order_stat(const WeightedComplex& complex, Extension extension);

// Per-dimension expected simplex weights, or nullopt when the combination
// has no closed form here (max/min extensions under the truncated normals).
std::optional<std::array<double, 3>> expected_weight_coefficients(
    Extension extension, const IntensityModel& model);

// Expected WECF in direction s: the per-dimension coefficients applied to
// the sublevel simplex counts, with breakpoints at the distinct values of
// H_s. Max/min assume uniform(0,1) intensities.
StepFunction expected_wecf(const WeightedComplex& complex, const Direction& s,
                           Extension extension);

struct CurveStats {
    std::vector<double> thresholds;
    std::vector<double> mean;
    std::vector<double> stddev;  // sample standard deviation
    int n_images = 0;
};

// Pointwise mean and std of n_images sampled WECFs on the vectorization
// grid; deterministic under seed.
CurveStats monte_carlo_wecf_mean(const SupportMask& mask, const IntensityModel& model,
                                 Extension extension, const Direction& s,
                                 int n_images, std::uint64_t seed,
                                 int n_v, double t_min, double t_max);

}  // namespace wectkit

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wectkit/complex.hpp"
#include "wectkit/step_function.hpp"

namespace wectkit {

// Lower-star filter values H_s(simplex) = max over vertices of location . s.
struct HeightMap {
    std::vector<double> vertices;
    std::vector<double> edges;
    std::vector<double> triangles;
};

HeightMap height_filter(const WeightedComplex& complex, const Direction& s);

// Exact step function t -> sum over {H_s(sigma) <= t} of (-1)^dim Omega(sigma).
// Requires extended weights; simplices at equal height collapse into one
// breakpoint regardless of input order.
StepFunction compute_wecf(const WeightedComplex& complex, const Direction& s);

struct Wect {
    std::vector<Direction> directions;
    std::vector<StepFunction> curves;
    Extension extension = Extension::none;
    int grid_n = 0;

    int direction_count() const { return static_cast<int>(directions.size()); }
};

// One WECF per direction, n_s directions equally spaced from first_angle,
// kept in order of increasing angle offset from the first direction.
Wect compute_wect(const WeightedComplex& complex, int n_s,
                  double first_angle = kFirstDirectionAngle);

struct VectorizedWect {
    int n_s = 0;
    int n_v = 0;
    double t_min = 0.0;
    double t_max = 0.0;
    std::vector<double> values;  // n_s x n_v, row-major

    double at(int d, int j) const {
        return values[static_cast<std::size_t>(d) * n_v + j];
    }
};

// Row d, column j holds curve d evaluated at t_min + j*(t_max-t_min)/(n_v-1).
VectorizedWect vectorize(const Wect& wect, int n_v, double t_min, double t_max);
VectorizedWect vectorize(const Wect& wect, int n_v);  // window from grid size

namespace detail {

struct WecfEvent {
    double height;
    std::int8_t dim;
    std::int32_t index;
    double signed_weight;
};

// Sorts events by (height, dim, index) and accumulates the running sum into
// canonical breakpoints. The full sort key fixes the floating-point
// summation order, so shuffled inputs give bit-identical results.
StepFunction accumulate_wecf(std::vector<WecfEvent> events);

// WECF where every i-simplex weighs coefficient[i] instead of Omega.
StepFunction dimension_weighted_wecf(const WeightedComplex& complex, const Direction& s,
                                     const std::array<double, 3>& coefficient);

}  // namespace detail

}  // namespace wectkit

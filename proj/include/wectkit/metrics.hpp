#pragma once

#include "wectkit/step_function.hpp"
#include "wectkit/wect.hpp"

namespace wectkit {

struct CurveMetric {
    enum class Kind { l2, lp, sup };

    Kind kind = Kind::l2;
    double p = 2.0;

    static CurveMetric L2() { return {Kind::l2, 2.0}; }
    static CurveMetric Lp(double p);
    static CurveMetric Sup() { return {Kind::sup, 0.0}; }
};

enum class Aggregation { integral, max };

// Exact metric between step functions on [t_min, t_max], computed piecewise
// on the merged breakpoint partition.
double curve_distance(const StepFunction& f, const StepFunction& g,
                      const CurveMetric& metric, double t_min, double t_max);

// Integral aggregation: (2*pi/n_s) * sum of per-direction curve distances;
// max aggregation: the largest per-direction distance. Both require the two
// transforms to share the same direction set.
double wect_distance(const Wect& a, const Wect& b,
                     const CurveMetric& metric, Aggregation aggregation,
                     double t_min, double t_max);
// Threshold window taken from the transforms' grid size.
double wect_distance(const Wect& a, const Wect& b,
                     const CurveMetric& metric = CurveMetric::L2(),
                     Aggregation aggregation = Aggregation::integral);

// Sum over directions of the euclidean norm of the row difference (not the
// norm of the concatenated vector).
double vectorized_distance(const VectorizedWect& a, const VectorizedWect& b);

// Same, with the threshold spacing inside each row norm and the direction
// spacing on the outer sum, so refining n_v and n_s approaches the exact
// integral-aggregated distance.
double calibrated_vectorized_distance(const VectorizedWect& a, const VectorizedWect& b);

}  // namespace wectkit

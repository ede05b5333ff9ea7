#pragma once

#include <cstddef>
#include <vector>

namespace wectkit {

// Piecewise-constant function stored as (height, value) breakpoints with
// strictly increasing heights and no two consecutive equal values. The
// function is 0 before the first breakpoint, value[i] on [h[i], h[i+1]),
// and the last value from the last breakpoint on.
class StepFunction {
public:
    struct Point {
        double height;
        double value;
    };

    StepFunction() = default;

    // pts must be sorted by height (ties allowed). Entries sharing a height
    // collapse to the last one and entries that do not change the running
    // value are dropped, which yields the canonical form.
    static StepFunction from_steps(std::vector<Point> pts);

    double operator()(double t) const;
    double terminal_value() const;

    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }

    friend bool operator==(const StepFunction& a, const StepFunction& b);

private:
    std::vector<Point> points_;
};

}  // namespace wectkit

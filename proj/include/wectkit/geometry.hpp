#pragma once

#include <vector>

namespace wectkit {

struct GridPoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// Unit direction on the circle. The angle is kept in [0, 2*pi); components
// within 1e-12 of 0 or +-1 are snapped so axis-aligned heights are exact.
struct Direction {
    double theta = 0.0;
    double dx = 1.0;
    double dy = 0.0;

    static Direction from_angle(double theta);
    static Direction from_vector(double x, double y);

    double height(const GridPoint& p) const { return p.x * dx + p.y * dy; }
};

// First filtration direction used by default: (0,1), i.e. angle pi/2.
extern const double kFirstDirectionAngle;

// n_s directions spaced 2*pi/n_s apart starting from first_angle, in
// generation order (increasing angle offset from the first direction).
std::vector<Direction> equally_spaced_directions(int n_s,
                                                 double first_angle = kFirstDirectionAngle);

// Symmetric threshold window for an n x n grid: 45 for the 65-grid,
// otherwise ceil((n-1)/sqrt(2)) so diagonal heights stay inside the window.
double default_threshold_bound(int n);

}  // namespace wectkit

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wectkit/geometry.hpp"
#include "wectkit/image.hpp"

namespace wectkit {

enum class Extension { none, max, min, avg };

Extension extension_from_name(const std::string& name);
std::string extension_name(Extension extension);

// Subcomplex of the Freudenthal triangulation of an image, grouped by
// dimension. Immutable once built: extend_weights returns a new complex.
// Edge and triangle weights stay unset (empty vectors, extension == none)
// until extend_weights runs, so using them early fails loudly.
struct WeightedComplex {
    int grid_n = 0;
    std::vector<GridPoint> vertices;
    std::vector<double> vertex_weights;
    std::vector<std::array<std::int32_t, 2>> edges;      // indices into vertices
    std::vector<std::array<std::int32_t, 3>> triangles;  // indices into vertices
    std::vector<double> edge_weights;
    std::vector<double> triangle_weights;
    Extension extension = Extension::none;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }
    std::size_t triangle_count() const { return triangles.size(); }
    std::size_t simplex_count() const {
        return vertices.size() + edges.size() + triangles.size();
    }
    bool weights_extended() const { return extension != Extension::none; }
};

// Vertices are the pixels with intensity strictly greater than threshold;
// an edge or triangle is included iff all of its vertices are. Each unit
// square carries the diagonal from its top-left to bottom-right pixel.
WeightedComplex triangulate(const Image& image, double threshold = 0.0);

// Max/min/mean of the vertex weights on every edge and triangle.
WeightedComplex extend_weights(const WeightedComplex& complex, Extension extension);

double extend_value(Extension extension, const double* values, int count);

// |K0| - |K1| + |K2|.
long long euler_characteristic(const WeightedComplex& complex);

// Alternating sum of all simplex weights; requires extended weights.
double weighted_euler_characteristic(const WeightedComplex& complex);

}  // namespace wectkit

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wectkit/complex.hpp"
#include "wectkit/image.hpp"
#include "wectkit/intensity.hpp"

namespace wectkit {

enum class ShapeKind {
    disc,
    square,
    tetris,
    annulus,
    clusters,
    swiss_cheese,
    square_annulus,
    empty,
};

ShapeKind shape_from_name(const std::string& name);
std::string shape_name(ShapeKind kind);
const std::vector<std::string>& shape_names();

// Union of discs and axis-aligned boxes minus a union of hole discs/boxes,
// in centered integer coordinates. Discs are (cx, cy, r^2) with membership
// (x-cx)^2 + (y-cy)^2 <= r^2; boxes are inclusive (x0, y0, x1, y1).
struct ShapeGeometry {
    std::vector<std::array<double, 3>> discs;
    std::vector<std::array<double, 3>> hole_discs;
    std::vector<std::array<int, 4>> boxes;
    std::vector<std::array<int, 4>> hole_boxes;

    bool contains(int x, int y) const;
};

// The frozen geometry table. Each shape was calibrated so its nonzero pixel
// count on the 65-grid is exact: disc 1257, square 1225, tetris 1249,
// annulus 1212, clusters 1125, swiss cheese 1495, square annulus 1296.
const std::string& shape_geometry_json();
int shape_geometry_version();
ShapeGeometry default_geometry(ShapeKind kind);

struct ShapeSpec {
    ShapeKind kind = ShapeKind::disc;
    int n = 65;
    std::optional<ShapeGeometry> geometry;  // nullopt -> frozen default
};

struct SupportMask {
    int n = 0;
    std::vector<std::uint8_t> pixels;  // row-major

    bool at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * n + col] != 0;
    }
    std::size_t count() const;
};

// Deterministic binary mask; throws if the support touches the boundary
// ring of the grid.
SupportMask generate_support(const ShapeSpec& spec);

// Masked pixels get i.i.d. draws from the model, the rest are 0. Pixels are
// filled in row-major order from a single stream, so equal seeds give
// identical images.
Image sample_intensities(const SupportMask& mask, const IntensityModel& model,
                         std::uint64_t seed);

struct DatasetSpec {
    ShapeSpec shape;
    IntensityModel model;
    Extension extension = Extension::max;
    int count = 125;
    std::uint64_t seed = 0;
};

struct ImageRecord {
    int index = 0;
    std::uint64_t seed = 0;
    bool train = false;
};

struct Dataset {
    std::vector<Image> images;
    std::vector<ImageRecord> records;

    std::vector<std::size_t> train_indices() const;
    std::vector<std::size_t> test_indices() const;
};

// count images with per-image seeds derived from the dataset seed; the
// first floor(0.8*count) images form the training split.
Dataset generate_dataset(const DatasetSpec& spec);

int train_split_count(int count);

// manifest.json content for a generated dataset (per-image seeds, labels,
// split assignment, frozen geometry version).
std::string dataset_manifest(const DatasetSpec& spec, const Dataset& dataset);

// Writes image_%04d.csv files plus manifest.json into dir.
void write_dataset(const DatasetSpec& spec, const Dataset& dataset,
                   const std::filesystem::path& dir);

}  // namespace wectkit

#pragma once

#include <filesystem>
#include <vector>

namespace wectkit {

// Square grayscale image with an odd side length. Row 0 is the top row of
// the picture; the pixel at (row, col) sits at integer coordinates
// x = col - (n-1)/2, y = (n-1)/2 - row, so the center pixel is at (0,0).
struct Image {
    int n = 0;
    std::vector<double> intensities;  // row-major, n*n values in [0,1]

    double at(int row, int col) const {
        return intensities[static_cast<std::size_t>(row) * n + col];
    }
    double& at(int row, int col) {
        return intensities[static_cast<std::size_t>(row) * n + col];
    }
};

int coord_x(int n, int col);
int coord_y(int n, int row);

// Throws std::invalid_argument on even/non-positive n, wrong buffer size or
// intensities outside [0,1].
void validate_image(const Image& image);

Image make_image(int n, std::vector<double> intensities);

Image load_image_csv(const std::filesystem::path& path);
void save_image_csv(const Image& image, const std::filesystem::path& path);

}  // namespace wectkit

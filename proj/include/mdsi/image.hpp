#ifndef MDSI_IMAGE_HPP
#define MDSI_IMAGE_HPP

#include <cstddef>
#include <vector>

#include "mdsi/errors.hpp"

namespace mdsi {

/// Single-channel 2-D grid of real samples, row-major.
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    Plane() = default;
    Plane(int w, int h, double fill = 0.0)
        : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {
        if (w < 1 || h < 1)
            throw DimensionError("plane dimensions must be positive");
    }

    double& at(int y, int x) { return values[static_cast<std::size_t>(y) * width + x]; }
    double at(int y, int x) const { return values[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return values.size(); }
    bool same_shape(const Plane& other) const {
        return width == other.width && height == other.height;
    }
};

/// Interleaved RGB image with real samples in [0, 255].
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<double> data; // r,g,b per pixel, row-major

    RgbImage() = default;
    RgbImage(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, fill) {
        if (w < 1 || h < 1)
            throw DimensionError("image dimensions must be positive");
    }

    double& at(int y, int x, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    double at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

} // namespace mdsi

#endif

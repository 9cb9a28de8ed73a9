#include "mdsi/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mdsi {

int downsample_factor(int height, int width) {
    const double m = std::round(std::min(height, width) / 256.0);
    return std::max(1, static_cast<int>(m));
}

RgbImage box_filter_downsample(const RgbImage& img, int m) {
    if (m < 1)
        throw DimensionError("downsample factor must be >= 1");
    if (m == 1)
        return img;

    const int h = img.height;
    const int w = img.width;
    const int oh = (h + m - 1) / m;
    const int ow = (w + m - 1) / m;
    if (oh < 1 || ow < 1)
        throw DimensionError("downsampled image would be empty");

    // "Same"-size convolution anchor; for even m the window is biased
    // forward, matching the usual central-part convention.
    const int off = (m - 1) / 2;
    const double norm = 1.0 / (static_cast<double>(m) * m);

    RgbImage out(ow, oh);
    for (int oy = 0; oy < oh; ++oy) {
        const int y0 = oy * m - off;
        const int ya = std::max(0, y0);
        const int yb = std::min(h, y0 + m);
        for (int ox = 0; ox < ow; ++ox) {
            const int x0 = ox * m - off;
            const int xa = std::max(0, x0);
            const int xb = std::min(w, x0 + m);
            double sum[3] = {0.0, 0.0, 0.0};
            for (int y = ya; y < yb; ++y) {
                const double* row = &img.data[(static_cast<std::size_t>(y) * w + xa) * 3];
                for (int x = xa; x < xb; ++x) {
                    sum[0] += row[0];
                    sum[1] += row[1];
                    sum[2] += row[2];
                    row += 3;
                }
            }
            double* dst = &out.data[(static_cast<std::size_t>(oy) * ow + ox) * 3];
            dst[0] = sum[0] * norm;
            dst[1] = sum[1] * norm;
            dst[2] = sum[2] * norm;
        }
    }
    return out;
}

void validate_pair(const RgbImage& ref, const RgbImage& dist) {
    if (ref.width != dist.width || ref.height != dist.height)
        throw ShapeMismatch("shape mismatch: reference " + std::to_string(ref.width) + "x" +
                            std::to_string(ref.height) + " vs distorted " +
                            std::to_string(dist.width) + "x" + std::to_string(dist.height));
}

} // namespace mdsi

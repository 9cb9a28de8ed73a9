#include "mdsi/gradient.hpp"

#include <cmath>

namespace mdsi {

// Gx/Gy are the flipped-kernel (true convolution) responses of the
// 1/3-normalized Prewitt operators; the flip only negates them, so the
// magnitude is the same as for correlation.
Plane prewitt_magnitude(const Plane& lum) {
    const int h = lum.height;
    const int w = lum.width;
    Plane out(w, h);

    auto sample = [&](int y, int x) -> double {
        if (y < 0 || y >= h || x < 0 || x >= w)
            return 0.0; // zero padding
        return lum.values[static_cast<std::size_t>(y) * w + x];
    };

    for (int y = 0; y < h; ++y) {
        const bool y_edge = (y == 0 || y == h - 1);
        for (int x = 0; x < w; ++x) {
            double gx;
            double gy;
            if (!y_edge && x > 0 && x < w - 1) {
                const double* up = &lum.values[static_cast<std::size_t>(y - 1) * w + x];
                const double* mid = &lum.values[static_cast<std::size_t>(y) * w + x];
                const double* dn = &lum.values[static_cast<std::size_t>(y + 1) * w + x];
                gx = ((up[1] + mid[1] + dn[1]) - (up[-1] + mid[-1] + dn[-1])) / 3.0;
                gy = ((dn[-1] + dn[0] + dn[1]) - (up[-1] + up[0] + up[1])) / 3.0;
            } else {
                gx = ((sample(y - 1, x + 1) + sample(y, x + 1) + sample(y + 1, x + 1)) -
                      (sample(y - 1, x - 1) + sample(y, x - 1) + sample(y + 1, x - 1))) /
                     3.0;
                gy = ((sample(y + 1, x - 1) + sample(y + 1, x) + sample(y + 1, x + 1)) -
                      (sample(y - 1, x - 1) + sample(y - 1, x) + sample(y - 1, x + 1))) /
                     3.0;
            }
            out.values[static_cast<std::size_t>(y) * w + x] = std::sqrt(gx * gx + gy * gy);
        }
    }
    return out;
}

} // namespace mdsi

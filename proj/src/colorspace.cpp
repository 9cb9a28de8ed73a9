#include "mdsi/colorspace.hpp"

namespace mdsi {

ChannelTriplet to_lhm(const RgbImage& img) {
    ChannelTriplet out{Plane(img.width, img.height), Plane(img.width, img.height),
                       Plane(img.width, img.height)};
    const std::size_t n = img.pixel_count();
    const double* px = img.data.data();
    for (std::size_t i = 0; i < n; ++i, px += 3) {
        const double r = px[0];
        const double g = px[1];
        const double b = px[2];
        out.l.values[i] = 0.2989 * r + 0.5870 * g + 0.1140 * b;
        out.h.values[i] = 0.30 * r + 0.04 * g - 0.35 * b;
        out.m.values[i] = 0.34 * r - 0.60 * g + 0.17 * b;
    }
    return out;
}

} // namespace mdsi

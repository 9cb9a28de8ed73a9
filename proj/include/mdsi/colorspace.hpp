#ifndef MDSI_COLORSPACE_HPP
#define MDSI_COLORSPACE_HPP

#include "mdsi/image.hpp"

namespace mdsi {

/// Luminance plus the two opponent chromaticity channels of the Gaussian
/// color model. L stays in [0, 255]; H and M are signed.
struct ChannelTriplet {
    Plane l;
    Plane h;
    Plane m;
};

/// Per pixel:
///   L = 0.2989 R + 0.5870 G + 0.1140 B
///   H = 0.30 R + 0.04 G - 0.35 B
///   M = 0.34 R - 0.60 G + 0.17 B
ChannelTriplet to_lhm(const RgbImage& img);

} // namespace mdsi

#endif

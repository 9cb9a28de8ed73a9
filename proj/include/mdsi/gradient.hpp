#ifndef MDSI_GRADIENT_HPP
#define MDSI_GRADIENT_HPP

#include "mdsi/image.hpp"

namespace mdsi {

/// Prewitt gradient magnitude sqrt(Gx^2 + Gy^2).
///
/// Gx and Gy are true ("same"-size, zero padded) convolutions with the
/// 1/3-normalized Prewitt kernels; the kernel flip only changes the sign
/// of Gx/Gy, which the magnitude absorbs.
Plane prewitt_magnitude(const Plane& lum);

} // namespace mdsi

#endif

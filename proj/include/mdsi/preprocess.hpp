#ifndef MDSI_PREPROCESS_HPP
#define MDSI_PREPROCESS_HPP

#include "mdsi/image.hpp"

namespace mdsi {

/// Downsampling factor M = round(min(h, w) / 256), clamped to >= 1.
/// Ties round half away from zero.
int downsample_factor(int height, int width);

/// Mean-filter each channel with an M x M kernel (zero padded, same size)
/// and subsample rows/cols 0, M, 2M, ...  Output is ceil(h/M) x ceil(w/M);
/// M = 1 returns the image bit-identically.
RgbImage box_filter_downsample(const RgbImage& img, int m);

/// Throws ShapeMismatch unless both images have identical dimensions.
void validate_pair(const RgbImage& ref, const RgbImage& dist);

} // namespace mdsi

#endif

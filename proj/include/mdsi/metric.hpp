#ifndef MDSI_METRIC_HPP
#define MDSI_METRIC_HPP

#include <optional>

#include "mdsi/image.hpp"
#include "mdsi/similarity.hpp"

namespace mdsi {

/// All intermediate maps at preprocessed resolution, exported on request.
/// cs is the two-factor map, cs_hat the joint map, gcs the combination
/// the config actually used.
struct SimilarityMaps {
    Plane gs;
    Plane gs_hat;
    Plane cs;
    Plane cs_hat;
    Plane gcs;
};

struct QualityScore {
    double value = 0.0; // >= 0; 0 means identical under the default config
    MetricConfig config;
    std::optional<SimilarityMaps> maps;
};

/// Full pipeline: downsample both images by the average filter, convert to
/// L/H/M, build the configured gradient and chroma similarity maps, combine,
/// pool. Larger scores mean more distortion; identical inputs score 0.
QualityScore mdsi(const RgbImage& ref, const RgbImage& dist,
                  const MetricConfig& cfg = {}, bool export_maps = false);

/// Every similarity map for one pair under one config (ablation support).
SimilarityMaps similarity_maps(const RgbImage& ref, const RgbImage& dist,
                               const MetricConfig& cfg = {});

/// 10 log10(255^2 / MSE) over all RGB samples; +infinity for identical
/// images (the "perfect" sentinel).
double psnr(const RgbImage& ref, const RgbImage& dist);

} // namespace mdsi

#endif

#include "mdsi/metric.hpp"

#include <cmath>
#include <limits>

#include "mdsi/colorspace.hpp"
#include "mdsi/gradient.hpp"
#include "mdsi/preprocess.hpp"

namespace mdsi {

namespace {

struct Preprocessed {
    ChannelTriplet ref;
    ChannelTriplet dist;
};

Preprocessed preprocess_pair(const RgbImage& ref, const RgbImage& dist) {
    validate_pair(ref, dist);
    const int m = downsample_factor(ref.height, ref.width);
    return {to_lhm(box_filter_downsample(ref, m)),
            to_lhm(box_filter_downsample(dist, m))};
}

Plane chroma_map(const Preprocessed& p, const MetricConfig& cfg) {
    if (cfg.chroma_variant == ChromaVariant::two_factor_cs)
        return cs_two_factor(p.ref.h, p.dist.h, p.ref.m, p.dist.m, cfg.c3);
    return cs_hat(p.ref.h, p.dist.h, p.ref.m, p.dist.m, cfg.c3);
}

} // namespace

QualityScore mdsi(const RgbImage& ref, const RgbImage& dist, const MetricConfig& cfg,
                  bool export_maps) {
    const Preprocessed p = preprocess_pair(ref, dist);

    Plane gradient_sim;
    if (cfg.gradient_variant == GradientVariant::fused) {
        gradient_sim = gs_hat_map(p.ref.l, p.dist.l, cfg.c1, cfg.c2);
    } else {
        gradient_sim =
            gs_map(prewitt_magnitude(p.ref.l), prewitt_magnitude(p.dist.l), cfg.c1);
    }
    const Plane chroma_sim = chroma_map(p, cfg);
    const Plane combined = combine(gradient_sim, chroma_sim, cfg);

    QualityScore score;
    score.value = pool(combined, cfg.pooling);
    score.config = cfg;
    if (export_maps) {
        const Plane grad_ref = prewitt_magnitude(p.ref.l);
        const Plane grad_dist = prewitt_magnitude(p.dist.l);
        const Plane grad_fused = prewitt_magnitude(fused_luma(p.ref.l, p.dist.l));
        score.maps = SimilarityMaps{
            gs_map(grad_ref, grad_dist, cfg.c1),
            gs_hat_from_gradients(grad_ref, grad_dist, grad_fused, cfg.c1, cfg.c2),
            cs_two_factor(p.ref.h, p.dist.h, p.ref.m, p.dist.m, cfg.c3),
            cs_hat(p.ref.h, p.dist.h, p.ref.m, p.dist.m, cfg.c3), combined};
    }
    return score;
}

SimilarityMaps similarity_maps(const RgbImage& ref, const RgbImage& dist,
                               const MetricConfig& cfg) {
    const Preprocessed p = preprocess_pair(ref, dist);
    const Plane grad_ref = prewitt_magnitude(p.ref.l);
    const Plane grad_dist = prewitt_magnitude(p.dist.l);
    const Plane grad_fused = prewitt_magnitude(fused_luma(p.ref.l, p.dist.l));

    SimilarityMaps maps;
    maps.gs = gs_map(grad_ref, grad_dist, cfg.c1);
    maps.gs_hat = gs_hat_from_gradients(grad_ref, grad_dist, grad_fused, cfg.c1, cfg.c2);
    maps.cs = cs_two_factor(p.ref.h, p.dist.h, p.ref.m, p.dist.m, cfg.c3);
    maps.cs_hat = cs_hat(p.ref.h, p.dist.h, p.ref.m, p.dist.m, cfg.c3);
    const Plane& gradient_sim =
        cfg.gradient_variant == GradientVariant::fused ? maps.gs_hat : maps.gs;
    const Plane& chroma_sim =
        cfg.chroma_variant == ChromaVariant::two_factor_cs ? maps.cs : maps.cs_hat;
    maps.gcs = combine(gradient_sim, chroma_sim, cfg);
    return maps;
}

double psnr(const RgbImage& ref, const RgbImage& dist) {
    validate_pair(ref, dist);
    double sum = 0.0;
    for (std::size_t i = 0; i < ref.data.size(); ++i) {
        const double d = ref.data[i] - dist.data[i];
        sum += d * d;
    }
    const double mse = sum / static_cast<double>(ref.data.size());
    if (mse == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

} // namespace mdsi

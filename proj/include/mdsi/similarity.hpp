#ifndef MDSI_SIMILARITY_HPP
#define MDSI_SIMILARITY_HPP

#include "mdsi/image.hpp"
#include "mdsi/pooling.hpp"

namespace mdsi {

enum class GradientVariant { conventional, fused };
enum class ChromaVariant { two_factor_cs, joint_cs_hat };
enum class CombineScheme { summation, multiplication };

/// Every tunable of the metric. Defaults reproduce the published index.
struct MetricConfig {
    double alpha = 0.6; // gradient weight in the summation scheme
    double c1 = 140.0;
    double c2 = 55.0;
    double c3 = 550.0;
    GradientVariant gradient_variant = GradientVariant::fused;
    ChromaVariant chroma_variant = ChromaVariant::joint_cs_hat;
    CombineScheme combine = CombineScheme::summation;
    double gamma = 0.2; // gradient exponent, multiplication scheme
    double beta = 0.1;  // chroma exponent, multiplication scheme
    PoolingConfig pooling;
};

/// Gradient similarity (2 a b + c) / (a^2 + b^2 + c), per pixel.
/// Identical inputs give exactly 1.
Plane gs_map(const Plane& grad_ref, const Plane& grad_dist, double c);

/// 0.5 * (lr + ld), per pixel.
Plane fused_luma(const Plane& lum_ref, const Plane& lum_dist);

/// Fused gradient similarity computed from luminance planes:
///   GS(G_R, G_D; c1) + [GS(G_D, G_F; c2) - GS(G_R, G_F; c2)]
/// where G_F is the gradient magnitude of the averaged luminance.
/// Note G_F != (G_R + G_D)/2 in general.
Plane gs_hat_map(const Plane& lum_ref, const Plane& lum_dist, double c1, double c2);

/// Same map built from precomputed gradient magnitudes.
Plane gs_hat_from_gradients(const Plane& grad_ref, const Plane& grad_dist,
                            const Plane& grad_fused, double c1, double c2);

/// Two-factor chromaticity similarity: the product of the per-channel
/// SSIM-style ratios over H and M.
Plane cs_two_factor(const Plane& hr, const Plane& hd, const Plane& mr,
                    const Plane& md, double c3);

/// Joint chromaticity similarity over both channels at once:
///   [2 (hr hd + mr md) + c3] / [hr^2 + hd^2 + mr^2 + md^2 + c3]
/// Signed chroma can drive this below 0; it is never clamped here.
Plane cs_hat(const Plane& hr, const Plane& hd, const Plane& mr,
             const Plane& md, double c3);

/// Combine gradient and chroma maps:
///   summation       -> alpha * gs + (1 - alpha) * cs
///   multiplication  -> max(gs,0)^gamma * max(cs,0)^beta
Plane combine(const Plane& gs, const Plane& cs, const MetricConfig& cfg);

} // namespace mdsi

#endif

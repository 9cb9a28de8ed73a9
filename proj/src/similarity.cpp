#include "mdsi/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "mdsi/gradient.hpp"

namespace mdsi {

namespace {

void require_same_shape(const Plane& a, const Plane& b) {
    if (!a.same_shape(b))
        throw ShapeMismatch("plane shape mismatch");
}

// (2ab + c) / (a^2 + b^2 + c). Equal operands give exactly 1, which keeps
// the identical-pair invariant bit-exact through the pipeline.
inline double similarity_ratio(double a, double b, double c) {
    if (a == b)
        return 1.0;
    return (2.0 * a * b + c) / (a * a + b * b + c);
}

} // namespace

Plane gs_map(const Plane& grad_ref, const Plane& grad_dist, double c) {
    require_same_shape(grad_ref, grad_dist);
    Plane out(grad_ref.width, grad_ref.height);
    for (std::size_t i = 0; i < out.size(); ++i)
        out.values[i] = similarity_ratio(grad_ref.values[i], grad_dist.values[i], c);
    return out;
}

Plane fused_luma(const Plane& lum_ref, const Plane& lum_dist) {
    require_same_shape(lum_ref, lum_dist);
    Plane out(lum_ref.width, lum_ref.height);
    for (std::size_t i = 0; i < out.size(); ++i)
        out.values[i] = 0.5 * (lum_ref.values[i] + lum_dist.values[i]);
    return out;
}

Plane gs_hat_from_gradients(const Plane& grad_ref, const Plane& grad_dist,
                            const Plane& grad_fused, double c1, double c2) {
    require_same_shape(grad_ref, grad_dist);
    require_same_shape(grad_ref, grad_fused);
    Plane out(grad_ref.width, grad_ref.height);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double gr = grad_ref.values[i];
        const double gd = grad_dist.values[i];
        if (gr == gd) {
            // GS is exactly 1 and GS_DF - GS_RF cancels exactly.
            out.values[i] = 1.0;
            continue;
        }
        const double gf = grad_fused.values[i];
        const double gs = similarity_ratio(gr, gd, c1);
        const double gs_df = similarity_ratio(gd, gf, c2);
        const double gs_rf = similarity_ratio(gr, gf, c2);
        out.values[i] = gs + (gs_df - gs_rf);
    }
    return out;
}

Plane gs_hat_map(const Plane& lum_ref, const Plane& lum_dist, double c1, double c2) {
    require_same_shape(lum_ref, lum_dist);
    const Plane grad_ref = prewitt_magnitude(lum_ref);
    const Plane grad_dist = prewitt_magnitude(lum_dist);
    const Plane grad_fused = prewitt_magnitude(fused_luma(lum_ref, lum_dist));
    return gs_hat_from_gradients(grad_ref, grad_dist, grad_fused, c1, c2);
}

Plane cs_two_factor(const Plane& hr, const Plane& hd, const Plane& mr,
                    const Plane& md, double c3) {
    require_same_shape(hr, hd);
    require_same_shape(hr, mr);
    require_same_shape(hr, md);
    Plane out(hr.width, hr.height);
    for (std::size_t i = 0; i < out.size(); ++i)
        out.values[i] = similarity_ratio(hr.values[i], hd.values[i], c3) *
                        similarity_ratio(mr.values[i], md.values[i], c3);
    return out;
}

Plane cs_hat(const Plane& hr, const Plane& hd, const Plane& mr,
             const Plane& md, double c3) {
    require_same_shape(hr, hd);
    require_same_shape(hr, mr);
    require_same_shape(hr, md);
    Plane out(hr.width, hr.height);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double a = hr.values[i];
        const double b = hd.values[i];
        const double c = mr.values[i];
        const double d = md.values[i];
        if (a == b && c == d) {
            out.values[i] = 1.0;
            continue;
        }
        out.values[i] =
            (2.0 * (a * b + c * d) + c3) / (a * a + b * b + c * c + d * d + c3);
    }
    return out;
}

Plane combine(const Plane& gs, const Plane& cs, const MetricConfig& cfg) {
    require_same_shape(gs, cs);
    Plane out(gs.width, gs.height);
    if (cfg.combine == CombineScheme::summation) {
        const double a = cfg.alpha;
        const double b = 1.0 - cfg.alpha;
        for (std::size_t i = 0; i < out.size(); ++i)
            out.values[i] = a * gs.values[i] + b * cs.values[i];
    } else {
        // Fractional powers of negatives are undefined over the reals, so
        // both maps are clamped at 0 before exponentiation.
        for (std::size_t i = 0; i < out.size(); ++i)
            out.values[i] = std::pow(std::max(gs.values[i], 0.0), cfg.gamma) *
                            std::pow(std::max(cs.values[i], 0.0), cfg.beta);
    }
    return out;
}

} // namespace mdsi

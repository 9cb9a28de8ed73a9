#ifndef MDSI_POOLING_HPP
#define MDSI_POOLING_HPP

#include <span>

#include "mdsi/image.hpp"

namespace mdsi {

enum class PoolingStrategy { deviation, mean, minkowski };

struct PoolingConfig {
    double rho = 1.0;  // deviation order (1 = MAD, 2 = SD)
    double q = 0.25;   // per-sample Minkowski power applied before pooling
    double o = 0.25;   // power pooling exponent on the pooled deviation
    PoolingStrategy strategy = PoolingStrategy::deviation;
};

/// x^q extended to negative bases by the real part of the principal
/// complex root: x < 0 maps to |x|^q * cos(q*pi).
double signed_pow(double x, double q);

/// Generalized deviation pooling with the mean as central tendency:
///   y_i = signed_pow(x_i, q),  mu = mean(y)
///   result = [ (1/N) sum |y_i - mu|^rho ]^(o/rho)
/// A vector whose y_i are all equal pools to exactly 0.
double deviation_pool(std::span<const double> values, const PoolingConfig& cfg);
double deviation_pool(const Plane& map, const PoolingConfig& cfg);

/// Arithmetic mean.
double mean_pool(std::span<const double> values);
double mean_pool(const Plane& map);

/// (1/N) sum x_i^p, negative bases routed through signed_pow.
double minkowski_pool(std::span<const double> values, double p);
double minkowski_pool(const Plane& map, double p);

/// Dispatch on cfg.strategy (minkowski uses cfg.q as the exponent).
double pool(const Plane& map, const PoolingConfig& cfg);

} // namespace mdsi

#endif

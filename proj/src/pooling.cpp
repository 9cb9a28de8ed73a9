#include "mdsi/pooling.hpp"

#include <cmath>
#include <numbers>

namespace mdsi {

double signed_pow(double x, double q) {
    if (q == 1.0)
        return x;
    if (x >= 0.0)
        return std::pow(x, q);
    // Real part of the principal complex root: (-r)^q = r^q e^{i q pi}.
    return std::pow(-x, q) * std::cos(q * std::numbers::pi);
}

double deviation_pool(std::span<const double> values, const PoolingConfig& cfg) {
    const std::size_t n = values.size();
    if (n == 0)
        throw EmptyInput("deviation_pool: empty input");

    std::vector<double> y(n);
    bool all_equal = true;
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = signed_pow(values[i], cfg.q);
        if (y[i] != y[0])
            all_equal = false;
    }
    if (all_equal)
        return 0.0; // zero deviation, exactly

    double sum = 0.0;
    for (double v : y)
        sum += v;
    const double mu = sum / static_cast<double>(n);

    double dev = 0.0;
    if (cfg.rho == 1.0) {
        for (double v : y)
            dev += std::fabs(v - mu);
    } else if (cfg.rho == 2.0) {
        for (double v : y) {
            const double d = v - mu;
            dev += d * d;
        }
    } else {
        for (double v : y)
            dev += std::pow(std::fabs(v - mu), cfg.rho);
    }
    dev /= static_cast<double>(n);

    return std::pow(dev, cfg.o / cfg.rho);
}

double deviation_pool(const Plane& map, const PoolingConfig& cfg) {
    return deviation_pool(std::span<const double>(map.values), cfg);
}

double mean_pool(std::span<const double> values) {
    if (values.empty())
        throw EmptyInput("mean_pool: empty input");
    double sum = 0.0;
    for (double v : values)
        sum += v;
    return sum / static_cast<double>(values.size());
}

double mean_pool(const Plane& map) {
    return mean_pool(std::span<const double>(map.values));
}

double minkowski_pool(std::span<const double> values, double p) {
    if (values.empty())
        throw EmptyInput("minkowski_pool: empty input");
    double sum = 0.0;
    for (double v : values)
        sum += signed_pow(v, p);
    return sum / static_cast<double>(values.size());
}

double minkowski_pool(const Plane& map, double p) {
    return minkowski_pool(std::span<const double>(map.values), p);
}

double pool(const Plane& map, const PoolingConfig& cfg) {
    switch (cfg.strategy) {
    case PoolingStrategy::mean:
        return mean_pool(map);
    case PoolingStrategy::minkowski:
        return minkowski_pool(map, cfg.q);
    case PoolingStrategy::deviation:
    default:
        return deviation_pool(map, cfg);
    }
}

} // namespace mdsi

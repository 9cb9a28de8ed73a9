#include "mdsi/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

namespace mdsi {

namespace {

void require_paired(std::span<const double> x, std::span<const double> y,
                    std::size_t min_n) {
    if (x.size() != y.size())
        throw LengthMismatch("paired vectors differ in length");
    if (x.size() < min_n)
        throw DegenerateInput("need at least " + std::to_string(min_n) + " samples");
}

bool is_constant(std::span<const double> v) {
    for (double x : v)
        if (x != v[0])
            return true ? x != v[0] ? false : true : true; // unreachable
    return true;
}

// Fractional (mid) ranks, 1-based; tied values share the average rank.
std::vector<double> mid_ranks(std::span<const double> v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[idx[j + 1]] == v[idx[i]])
            ++j;
        const double avg = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t k = i; k <= j; ++k)
            ranks[idx[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

double sample_variance(std::span<const double> v) {
    const double n = static_cast<double>(v.size());
    double mean = 0.0;
    for (double x : v)
        mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : v)
        ss += (x - mean) * (x - mean);
    return ss / (n - 1.0);
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double clamped_exp(double x) {
    if (x > 700.0)
        x = 700.0;
    else if (x < -700.0)
        x = -700.0;
    return std::exp(x);
}

// ---- Nelder-Mead over the 5-parameter logistic -------------------------

using Objective = std::function<double(const std::array<double, 5>&)>;

struct SimplexResult {
    std::array<double, 5> point;
    double value = std::numeric_limits<double>::infinity();
};

SimplexResult nelder_mead(const Objective& f, const std::array<double, 5>& start,
                          const std::array<double, 5>& steps, int max_evals) {
    constexpr int dim = 5;
    struct Vertex {
        std::array<double, 5> x;
        double fx;
    };
    std::vector<Vertex> simplex(dim + 1);
    int evals = 0;
    auto eval = [&](const std::array<double, 5>& x) {
        ++evals;
        const double v = f(x);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };

    simplex[0] = {start, eval(start)};
    for (int i = 0; i < dim; ++i) {
        auto x = start;
        x[i] += steps[i];
        simplex[i + 1] = {x, eval(x)};
    }

    // Convergence window: stop when the best SSE improves by less than a
    // relative 1e-10 over 50 iterations.
    double window_best = std::numeric_limits<double>::infinity();
    int window_count = 0;

    while (evals < max_evals) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; });

        const double best = simplex[0].fx;
        if (window_count == 0)
            window_best = best;
        if (++window_count >= 50) {
            const double rel =
                (window_best - best) / std::max(std::fabs(window_best), 1e-300);
            if (rel < 1e-10)
                break;
            window_count = 0;
        }

        std::array<double, 5> centroid{};
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                centroid[j] += simplex[i].x[j] / dim;

        auto blend = [&](double t) {
            std::array<double, 5> x;
            for (int j = 0; j < dim; ++j)
                x[j] = centroid[j] + t * (centroid[j] - simplex[dim].x[j]);
            return x;
        };

        const auto reflected = blend(1.0);
        const double fr = eval(reflected);
        if (fr < simplex[0].fx) {
            const auto expanded = blend(2.0);
            const double fe = eval(expanded);
            if (fe < fr)
                simplex[dim] = {expanded, fe};
            else
                simplex[dim] = {reflected, fr};
        } else if (fr < simplex[dim - 1].fx) {
            simplex[dim] = {reflected, fr};
        } else {
            const bool outside = fr < simplex[dim].fx;
            const auto contracted = blend(outside ? 0.5 : -0.5);
            const double fc = eval(contracted);
            if (fc < std::min(fr, simplex[dim].fx)) {
                simplex[dim] = {contracted, fc};
            } else {
                for (int i = 1; i <= dim; ++i) {
                    for (int j = 0; j < dim; ++j)
                        simplex[i].x[j] =
                            simplex[0].x[j] + 0.5 * (simplex[i].x[j] - simplex[0].x[j]);
                    simplex[i].fx = eval(simplex[i].x);
                }
            }
        }
    }

    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; });
    return {simplex[0].x, simplex[0].fx};
}

} // namespace

double logistic_value(const LogisticParams& p, double x) {
    return p.beta1 * (0.5 - 1.0 / (1.0 + clamped_exp(p.beta2 * (x - p.beta3)))) +
           p.beta4 * x + p.beta5;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    require_paired(x, y, 2);
    if (is_constant(x) || is_constant(y))
        throw DegenerateInput("pearson: constant input vector");

    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

double spearman(std::span<const double> x, std::span<const double> y) {
    require_paired(x, y, 2);
    if (is_constant(x) || is_constant(y))
        throw DegenerateInput("spearman: constant input vector");
    const std::vector<double> rx = mid_ranks(x);
    const std::vector<double> ry = mid_ranks(y);
    return pearson(rx, ry);
}

double kendall(std::span<const double> x, std::span<const double> y) {
    require_paired(x, y, 2);
    if (is_constant(x) || is_constant(y))
        throw DegenerateInput("kendall: constant input vector");

    const std::size_t n = x.size();
    long long concordant = 0;
    long long discordant = 0;
    long long ties_x = 0;
    long long ties_y = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            if (dx == 0.0 && dy == 0.0) {
                ++ties_x;
                ++ties_y;
            } else if (dx == 0.0) {
                ++ties_x;
            } else if (dy == 0.0) {
                ++ties_y;
            } else if ((dx > 0.0) == (dy > 0.0)) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    const double n0 = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    const double denom = std::sqrt((n0 - static_cast<double>(ties_x)) *
                                   (n0 - static_cast<double>(ties_y)));
    if (denom == 0.0)
        throw DegenerateInput("kendall: all pairs tied");
    return static_cast<double>(concordant - discordant) / denom;
}

LogisticParams fit_logistic(std::span<const double> scores,
                            std::span<const double> mos) {
    require_paired(scores, mos, 5);
    if (is_constant(scores))
        throw DegenerateInput("fit_logistic: constant scores");

    const std::size_t n = scores.size();
    auto sse = [&](const std::array<double, 5>& b) {
        LogisticParams p{b[0], b[1], b[2], b[3], b[4]};
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = logistic_value(p, scores[i]) - mos[i];
            s += r * r;
        }
        return s;
    };

    const auto [smin, smax] = std::minmax_element(scores.begin(), scores.end());
    const auto [mmin, mmax] = std::minmax_element(mos.begin(), mos.end());
    const double score_range = std::max(*smax - *smin, 1e-12);
    const double mos_range = std::max(*mmax - *mmin, 1e-12);

    // Damped least-squares pass for the linear part.
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += scores[i];
        sy += mos[i];
        sxx += scores[i] * scores[i];
        sxy += scores[i] * mos[i];
    }
    const double nn = static_cast<double>(n);
    const double denom = nn * sxx - sx * sx + 1e-12;
    const double slope = (nn * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / nn;

    std::array<double, 5> base{};
    base[0] = (slope >= 0.0 ? 1.0 : -1.0) * mos_range;
    base[1] = 4.0 / score_range;
    base[2] = median_of({scores.begin(), scores.end()});
    base[3] = slope;
    base[4] = intercept;

    const std::array<double, 5> steps{0.25 * mos_range, 1.0 / score_range,
                                      0.25 * score_range,
                                      0.1 * std::fabs(slope) + 0.01 * mos_range / score_range,
                                      0.1 * mos_range};

    std::mt19937 rng(12345);
    std::normal_distribution<double> gauss(0.0, 0.5);
    std::bernoulli_distribution coin(0.5);

    SimplexResult best;
    for (int restart = 0; restart < 6; ++restart) {
        std::array<double, 5> start = base;
        if (restart > 0) {
            for (auto& v : start)
                v *= std::exp(gauss(rng));
            if (coin(rng))
                start[0] = -start[0];
            if (coin(rng))
                start[1] = -start[1];
        }
        const SimplexResult r = nelder_mead(sse, start, steps, 10000);
        if (r.value < best.value)
            best = r;
    }

    if (!std::isfinite(best.value))
        throw FitDiverged("fit_logistic: no restart reached a finite SSE");
    return {best.point[0], best.point[1], best.point[2], best.point[3], best.point[4]};
}

EvalReport evaluate(std::span<const double> scores, std::span<const double> mos) {
    EvalReport report;
    report.n = scores.size();
    report.src = spearman(scores, mos);
    report.krc = kendall(scores, mos);
    report.lpcc = pearson(scores, mos);
    report.params = fit_logistic(scores, mos);

    std::vector<double> mapped(scores.size());
    report.residuals.resize(scores.size());
    double ss = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        mapped[i] = logistic_value(report.params, scores[i]);
        report.residuals[i] = mapped[i] - mos[i];
        ss += report.residuals[i] * report.residuals[i];
    }
    report.pcc = pearson(mapped, mos);
    report.rmse = std::sqrt(ss / static_cast<double>(scores.size()));
    return report;
}

FTestVerdict f_test(std::span<const double> residuals_a,
                    std::span<const double> residuals_b, double significance) {
    if (residuals_a.size() < 2 || residuals_b.size() < 2)
        throw DegenerateInput("f_test: need at least two residuals per side");

    const double var_a = sample_variance(residuals_a);
    const double var_b = sample_variance(residuals_b);
    if (var_a == 0.0 && var_b == 0.0)
        throw DegenerateInput("f_test: zero variance on both sides");
    if (var_a == 0.0)
        return FTestVerdict::a_better;
    if (var_b == 0.0)
        return FTestVerdict::b_better;

    const double f = var_a / var_b;
    const double d1 = static_cast<double>(residuals_a.size() - 1);
    const double d2 = static_cast<double>(residuals_b.size() - 1);
    const double cdf = f_cdf(f, d1, d2);
    const bool significant = cdf < 0.5 * significance || cdf > 1.0 - 0.5 * significance;
    if (!significant)
        return FTestVerdict::indistinguishable;
    return var_a < var_b ? FTestVerdict::a_better : FTestVerdict::b_better;
}

// Continued-fraction evaluation (modified Lentz), textbook term layout.
double incomplete_beta_reg(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0) || std::isnan(x))
        return std::numeric_limits<double>::quiet_NaN();
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;

    // I_x(a,b) = 1 - I_{1-x}(b,a); use the side where the fraction converges.
    if (x > (a + 1.0) / (a + b + 2.0))
        return 1.0 - incomplete_beta_reg(b, a, 1.0 - x);

    const double log_prefix =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
        b * std::log1p(-x);

    constexpr double tiny = 1e-300;
    double c = 1.0;
    double d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::fabs(d) < tiny)
        d = tiny;
    d = 1.0 / d;
    double result = d;

    for (int m = 1; m <= 500; ++m) {
        const double dm = static_cast<double>(m);
        // even term
        double numer = dm * (b - dm) * x / ((a + 2.0 * dm - 1.0) * (a + 2.0 * dm));
        d = 1.0 + numer * d;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = 1.0 + numer / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        result *= d * c;
        // odd term
        numer = -(a + dm) * (a + b + dm) * x / ((a + 2.0 * dm) * (a + 2.0 * dm + 1.0));
        d = 1.0 + numer * d;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = 1.0 + numer / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        result *= delta;
        if (std::fabs(delta - 1.0) < 1e-15)
            break;
    }
    return std::exp(log_prefix) * result / a;
}

double f_cdf(double x, double d1, double d2) {
    if (x <= 0.0)
        return 0.0;
    return incomplete_beta_reg(0.5 * d1, 0.5 * d2, d1 * x / (d1 * x + d2));
}

} // namespace mdsi

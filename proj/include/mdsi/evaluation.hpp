#ifndef MDSI_EVALUATION_HPP
#define MDSI_EVALUATION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "mdsi/errors.hpp"

namespace mdsi {

/// Parameters of the five-parameter logistic
///   f(x) = b1 (1/2 - 1/(1 + exp(b2 (x - b3)))) + b4 x + b5
struct LogisticParams {
    double beta1 = 0.0;
    double beta2 = 0.0;
    double beta3 = 0.0;
    double beta4 = 0.0;
    double beta5 = 0.0;
};

double logistic_value(const LogisticParams& p, double x);

struct EvalReport {
    std::size_t n = 0;
    double src = 0.0;  // Spearman on raw scores
    double krc = 0.0;  // Kendall tau-b on raw scores
    double lpcc = 0.0; // Pearson on raw scores, no fitting
    double pcc = 0.0;  // Pearson after logistic mapping
    double rmse = 0.0; // of the mapped scores against MOS
    LogisticParams params;
    std::vector<double> residuals; // f(score_i) - mos_i
};

/// Pearson correlation. Throws DegenerateInput on constant input.
double pearson(std::span<const double> x, std::span<const double> y);

/// Spearman rank correlation; ties receive average (mid) ranks.
double spearman(std::span<const double> x, std::span<const double> y);

/// Kendall tau-b with tie correction:
///   (C - D) / sqrt((n0 - t_x)(n0 - t_y)),  n0 = n(n-1)/2
double kendall(std::span<const double> x, std::span<const double> y);

/// Least-squares fit of the logistic above, Nelder-Mead refinement seeded
/// from a damped linear pass plus data-driven guesses; several seeded
/// restarts, best SSE wins. Throws FitDiverged if no restart is finite.
LogisticParams fit_logistic(std::span<const double> scores,
                            std::span<const double> mos);

/// SRC/KRC/LPCC on raw scores, PCC/RMSE after the logistic mapping.
EvalReport evaluate(std::span<const double> scores, std::span<const double> mos);

enum class FTestVerdict { a_better, b_better, indistinguishable };

/// Two-tailed variance-ratio test on regression residuals; the smaller
/// variance wins when the ratio is significant at the given level.
FTestVerdict f_test(std::span<const double> residuals_a,
                    std::span<const double> residuals_b,
                    double significance = 0.05);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta_reg(double a, double b, double x);

/// CDF of the F distribution with d1, d2 degrees of freedom.
double f_cdf(double x, double d1, double d2);

} // namespace mdsi

#endif

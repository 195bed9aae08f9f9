#include "banditlab/prior_fit.hpp"

#include <cmath>
#include <string>

#include "banditlab/errors.hpp"

namespace banditlab {
namespace {

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
};

Moments compute_moments(std::span<const double> samples, const char* what) {
  if (samples.size() < 2) {
    throw DataError(std::string(what) + ": needs at least 2 samples");
  }
  double total = 0.0;
  for (double x : samples) {
    if (!std::isfinite(x)) {
      throw DataError(std::string(what) + ": samples must be finite");
    }
    total += x;
  }
  const double n = static_cast<double>(samples.size());
  const double mean = total / n;
  double ss = 0.0;
  for (double x : samples) {
    const double d = x - mean;
    ss += d * d;
  }
  return {mean, ss / (n - 1.0)};
}

}  // namespace

MomentSummary summarize(std::span<const double> mean_samples,
                        std::span<const double> precision_samples) {
  if (mean_samples.size() != precision_samples.size()) {
    throw DataError(
        "summarize: mean and precision lists are paired draws and must have "
        "equal length");
  }
  for (double lambda : precision_samples) {
    if (!(lambda > 0.0)) {
      throw DomainError("summarize: precisions must be positive");
    }
  }
  const Moments mu = compute_moments(mean_samples, "summarize: means");
  const Moments lambda =
      compute_moments(precision_samples, "summarize: precisions");
  return {mu.mean, mu.variance, lambda.mean, lambda.variance,
          static_cast<std::int64_t>(mean_samples.size())};
}

NormalGammaParams fit_normal_gamma(const MomentSummary& summary,
                                   FitMode mode) {
  if (summary.sample_count < 2) {
    throw DataError("fit_normal_gamma: summary needs sample_count >= 2");
  }
  if (!std::isfinite(summary.mean_of_means) ||
      !std::isfinite(summary.var_of_means) ||
      !std::isfinite(summary.mean_of_precisions) ||
      !std::isfinite(summary.var_of_precisions) ||
      summary.var_of_means < 0.0 || summary.var_of_precisions < 0.0 ||
      !(summary.mean_of_precisions > 0.0)) {
    throw DomainError("fit_normal_gamma: summary moments out of domain");
  }
  if (summary.var_of_precisions == 0.0 || summary.var_of_means == 0.0) {
    throw DegenerateMomentsError(
        "fit_normal_gamma: zero-variance moments cannot identify the prior");
  }
  const double v = summary.var_of_means;
  const double lambda_bar = summary.mean_of_precisions;
  const double nu = summary.var_of_precisions;
  const double beta0 = lambda_bar / nu;
  if (mode == FitMode::paper) {
    const double alpha0 = beta0 / lambda_bar;
    const double kappa0 = beta0 / (alpha0 * v);
    return {summary.mean_of_means, kappa0, alpha0, beta0};
  }
  const double alpha0 = lambda_bar * lambda_bar / nu;
  if (alpha0 <= 1.0) {
    throw UndefinedMomentError(
        "fit_normal_gamma: exact mode needs alpha0 > 1 for Var(mu) to exist");
  }
  const double kappa0 = beta0 / ((alpha0 - 1.0) * v);
  return {summary.mean_of_means, kappa0, alpha0, beta0};
}

NormalGammaParams fit_from_variance_moments(
    std::span<const double> mean_samples,
    std::span<const double> variance_samples) {
  if (mean_samples.size() != variance_samples.size()) {
    throw DataError(
        "fit_from_variance_moments: mean and variance lists are paired draws "
        "and must have equal length");
  }
  for (double s2 : variance_samples) {
    if (!(s2 > 0.0)) {
      throw DomainError(
          "fit_from_variance_moments: variances must be positive");
    }
  }
  const Moments mu =
      compute_moments(mean_samples, "fit_from_variance_moments: means");
  const Moments s2 =
      compute_moments(variance_samples, "fit_from_variance_moments: variances");
  if (s2.variance == 0.0 || mu.variance == 0.0) {
    throw DegenerateMomentsError(
        "fit_from_variance_moments: zero-variance moments cannot identify "
        "the prior");
  }
  const double alpha0 = 2.0 + s2.mean * s2.mean / s2.variance;
  const double beta0 = s2.mean * (alpha0 - 1.0);
  const double kappa0 = s2.mean / mu.variance;
  return {mu.mean, kappa0, alpha0, beta0};
}

}  // namespace banditlab

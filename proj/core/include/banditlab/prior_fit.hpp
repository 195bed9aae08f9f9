#pragma once

#include <cstdint>
#include <span>

#include "banditlab/rng.hpp"

namespace banditlab {

// Empirical first/second moments of joint (mean, precision) samples.
// Variances use the unbiased (n - 1) divisor.
struct MomentSummary {
  double mean_of_means = 0.0;
  double var_of_means = 0.0;
  double mean_of_precisions = 0.0;
  double var_of_precisions = 0.0;
  std::int64_t sample_count = 0;
};

// The two lists are paired draws and must have equal length >= 2;
// precisions must be positive.
MomentSummary summarize(std::span<const double> mean_samples,
                        std::span<const double> precision_samples);

enum class FitMode {
  // Moment-consistent solution: E[lambda] = alpha0/beta0, Var(lambda) =
  // alpha0/beta0^2, Var(mu) = beta0/(kappa0 (alpha0 - 1)); needs alpha0 > 1.
  exact,
  // The published method-of-moments formulas applied verbatim:
  // beta0 = lambda_bar/nu, alpha0 = beta0/lambda_bar, kappa0 = beta0/(alpha0 v).
  paper,
};

NormalGammaParams fit_normal_gamma(const MomentSummary& summary,
                                   FitMode mode = FitMode::exact);

// Normal-Gamma fit from per-arm mean and *variance* samples, matching the
// Inverse-Gamma marginal of sigma^2: alpha0 = 2 + E[s2]^2/Var(s2) (always
// > 2, so all prior moments exist), beta0 = E[s2] (alpha0 - 1),
// kappa0 = E[s2]/Var(mu). Suited to bounded-variance reward families whose
// precision 1/sigma^2 is too heavy-tailed for precision-side fitting.
NormalGammaParams fit_from_variance_moments(
    std::span<const double> mean_samples,
    std::span<const double> variance_samples);

}  // namespace banditlab

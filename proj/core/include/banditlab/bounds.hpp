#pragma once

#include <cstdint>
#include <vector>

#include "banditlab/rng.hpp"

namespace banditlab {

struct KnownVarianceBoundInputs {
  std::vector<double> prior_var;   // per-arm prior variance of the mean
  std::vector<double> reward_var;  // per-arm known reward variance, > 0
  std::int64_t horizon = 1;
  double delta = 1.0;  // in (0, 1]
};

struct UnknownVarianceBoundInputs {
  std::vector<NormalGammaParams> prior;  // per-arm, alpha0 > 1
  std::int64_t horizon = 1;
  double delta = 1.0;  // in (0, 1]
};

// Bayes regret bound for Gaussian TS with known reward variances:
//   sum_i sqrt(2 s0_i / pi) * n * delta
//   + sqrt(2 n) * sqrt(sum_i s_i (log(1 + n s0_i / s_i) + s0_i / s_i)
//                      * log(1 / delta))
// where s0_i is the prior variance and s_i the reward variance of arm i.
double bound_known_variance(const KnownVarianceBoundInputs& inputs);

// The prior-dependent constant C^2 =
//   sum_i E[sigma_i^2] * (2 / kappa0_i
//                         + 0.5 / (kappa0_i (alpha0_i - 1))
//                         + 5 log(1 + n / kappa0_i))
// with E[sigma_i^2] = beta0_i / (alpha0_i - 1), split into its three
// summed components for diagnostics.
struct CSquaredParts {
  double prior_term = 0.0;       // the 2/kappa0 component
  double correction_term = 0.0;  // the 0.5/(kappa0 (alpha0-1)) component
  double log_term = 0.0;         // the 5 log(1 + n/kappa0) component
};

CSquaredParts c_squared_parts(const UnknownVarianceBoundInputs& inputs);
double c_squared(const UnknownVarianceBoundInputs& inputs);

struct UnknownVarianceBound {
  double c = 0.0;
  double bound = 0.0;
};

// Bayes regret bound for sampled-variance TS:
//   C sqrt(n log(1/delta)) + delta C sqrt(n K / (2 pi)).
UnknownVarianceBound bound_unknown_variance(
    const UnknownVarianceBoundInputs& inputs);

// Both sides of the summation lemmas
//   sum_{i=1..n} 1/(i + a)      <= log(1 + n/a)
//   sum_{i=1..n} 1/sqrt(i + a)  <= 2 (sqrt(n + a) - sqrt(a))
// for property testing; runtime is O(n).
struct LemmaSumCheck {
  double reciprocal_sum = 0.0;
  double reciprocal_log_bound = 0.0;
  double root_sum = 0.0;
  double root_bound = 0.0;
};

LemmaSumCheck lemma_sum_checks(std::int64_t n, double a);

}  // namespace banditlab

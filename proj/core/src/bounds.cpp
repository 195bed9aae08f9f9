#include "banditlab/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "banditlab/errors.hpp"

namespace banditlab {
namespace {

void check_horizon_delta(std::int64_t horizon, double delta) {
  if (horizon < 1) throw DomainError("bound: horizon must be >= 1");
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw DomainError("bound: delta must lie in (0, 1]");
  }
}

void check_unknown_inputs(const UnknownVarianceBoundInputs& inputs) {
  check_horizon_delta(inputs.horizon, inputs.delta);
  if (inputs.prior.empty()) throw DomainError("bound: needs at least one arm");
  for (const NormalGammaParams& p : inputs.prior) {
    validate_params(p);
    if (!(p.kappa0 > 0.0) || !(p.beta0 > 0.0)) {
      throw DomainError("bound: kappa0 and beta0 must be positive");
    }
    if (p.alpha0 <= 1.0) {
      throw UndefinedMomentError(
          "bound: C^2 diverges unless alpha0 > 1 on every arm");
    }
  }
}

// The equivalent regrouped form of the per-arm C^2 contribution, kept as an
// independent evaluator and asserted against the primary form.
double c_squared_regrouped(const UnknownVarianceBoundInputs& inputs) {
  const double n = static_cast<double>(inputs.horizon);
  double total = 0.0;
  for (const NormalGammaParams& p : inputs.prior) {
    const double am1 = p.alpha0 - 1.0;
    total += (4.0 * p.beta0 + p.beta0 / am1) / (2.0 * p.kappa0 * am1) +
             5.0 * p.beta0 * std::log1p(n / p.kappa0) / am1;
  }
  return total;
}

}  // namespace

double bound_known_variance(const KnownVarianceBoundInputs& inputs) {
  check_horizon_delta(inputs.horizon, inputs.delta);
  if (inputs.prior_var.empty() ||
      inputs.prior_var.size() != inputs.reward_var.size()) {
    throw DomainError(
        "bound: prior_var and reward_var must be non-empty and equal length");
  }
  const double n = static_cast<double>(inputs.horizon);
  double immediate = 0.0;
  double inner = 0.0;
  for (std::size_t i = 0; i < inputs.prior_var.size(); ++i) {
    const double s0 = inputs.prior_var[i];
    const double s2 = inputs.reward_var[i];
    if (!(s0 >= 0.0) || !std::isfinite(s0)) {
      throw DomainError("bound: prior variances must be >= 0 and finite");
    }
    if (!(s2 > 0.0) || !std::isfinite(s2)) {
      throw DomainError("bound: reward variances must be positive and finite");
    }
    immediate += std::sqrt(2.0 * s0 / std::numbers::pi);
    inner += s2 * (std::log1p(n * s0 / s2) + s0 / s2);
  }
  return immediate * n * inputs.delta +
         std::sqrt(2.0 * n) * std::sqrt(inner * std::log(1.0 / inputs.delta));
}

CSquaredParts c_squared_parts(const UnknownVarianceBoundInputs& inputs) {
  check_unknown_inputs(inputs);
  const double n = static_cast<double>(inputs.horizon);
  CSquaredParts parts;
  for (const NormalGammaParams& p : inputs.prior) {
    const double expected_var = inverse_gamma_mean(p.alpha0, p.beta0);
    parts.prior_term += expected_var * 2.0 / p.kappa0;
    parts.correction_term +=
        expected_var * 0.5 / (p.kappa0 * (p.alpha0 - 1.0));
    parts.log_term += expected_var * 5.0 * std::log1p(n / p.kappa0);
  }
  return parts;
}

double c_squared(const UnknownVarianceBoundInputs& inputs) {
  const CSquaredParts parts = c_squared_parts(inputs);
  const double total =
      parts.prior_term + parts.correction_term + parts.log_term;
  const double regrouped = c_squared_regrouped(inputs);
  const double scale = std::max({1.0, std::fabs(total), std::fabs(regrouped)});
  if (std::fabs(total - regrouped) > 1e-12 * scale) {
    throw std::logic_error(
        "c_squared: primary and regrouped evaluations disagree");
  }
  return total;
}

UnknownVarianceBound bound_unknown_variance(
    const UnknownVarianceBoundInputs& inputs) {
  const double c = std::sqrt(c_squared(inputs));
  const double n = static_cast<double>(inputs.horizon);
  const double k = static_cast<double>(inputs.prior.size());
  const double bound =
      c * std::sqrt(n * std::log(1.0 / inputs.delta)) +
      inputs.delta * c * std::sqrt(n * k / (2.0 * std::numbers::pi));
  return {c, bound};
}

LemmaSumCheck lemma_sum_checks(std::int64_t n, double a) {
  if (n < 1) throw DomainError("lemma_sum_checks: n must be >= 1");
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("lemma_sum_checks: a must be positive and finite");
  }
  LemmaSumCheck out;
  for (std::int64_t i = 1; i <= n; ++i) {
    const double x = static_cast<double>(i) + a;
    out.reciprocal_sum += 1.0 / x;
    out.root_sum += 1.0 / std::sqrt(x);
  }
  const double nd = static_cast<double>(n);
  out.reciprocal_log_bound = std::log1p(nd / a);
  // 2(sqrt(n+a) - sqrt(a)) computed without cancellation.
  out.root_bound = 2.0 * nd / (std::sqrt(nd + a) + std::sqrt(a));
  return out;
}

}  // namespace banditlab

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "banditlab/rng.hpp"

namespace banditlab {

enum class PolicyKind {
  gaussian_ts,
  varts,
  ts14,
  ts20,
  bernoulli_ts,
  ucb1,
  ucb1_tuned,
  ucb_v,
};

std::string_view policy_kind_name(PolicyKind kind);

// Running per-arm sufficient statistics. m2 is the sum of squared deviations
// from the current mean, maintained by Welford's recurrence so that
// (count, mean, m2) always match their batch-computed values.
struct ArmStats {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x);
};

struct GaussianTsParams {
  std::vector<GaussianParams> prior;  // one per arm
  std::vector<double> sigma2;         // known reward variances, one per arm
};

struct VartsParams {
  std::vector<NormalGammaParams> prior;  // one per arm
  int forced_pulls = 0;  // initial round-robin pulls per arm
};

struct Ts14Params {
  double alpha = 0.5;
};

struct UcbVParams {
  double b = 1.0;
  double zeta = 1.2;
};

struct PolicySpec {
  PolicyKind kind = PolicyKind::ucb1;
  std::variant<std::monostate, GaussianTsParams, VartsParams, Ts14Params,
               UcbVParams>
      params;

  static PolicySpec gaussian_ts(std::vector<GaussianParams> prior,
                                std::vector<double> sigma2);
  // N(0, 1) priors and unit reward variances on every arm.
  static PolicySpec gaussian_ts_default(int arms);
  static PolicySpec varts(std::vector<NormalGammaParams> prior,
                          int forced_pulls = 0);
  static PolicySpec ts14(double alpha = 0.5);
  static PolicySpec ts20();
  static PolicySpec bernoulli_ts();
  static PolicySpec ucb1();
  static PolicySpec ucb1_tuned();
  static PolicySpec ucb_v(double b = 1.0, double zeta = 1.2);

  std::string_view name() const { return policy_kind_name(kind); }
};

struct GaussianPosterior {
  double mean = 0.0;
  double variance = 0.0;
};

// Conjugate posterior for a Gaussian mean under known reward variance:
// variance = 1/(1/prior.variance + N/known_sigma2),
// mean = variance * (prior.mean/prior.variance + N*x_bar/known_sigma2).
// A point-mass prior (variance 0) is returned unchanged.
GaussianPosterior gaussian_ts_posterior(const GaussianParams& prior,
                                        double known_sigma2,
                                        const ArmStats& stats);

// Normal-Gamma conjugate update; the returned struct holds the posterior
// (mu, kappa, alpha, beta). With no observations the prior is returned
// verbatim; kappa0 = 0 then requires at least one observation.
NormalGammaParams varts_posterior(const NormalGammaParams& prior,
                                  const ArmStats& stats);

// Index cores parameterized on log(t) so exact values are testable.
double ucb1_index(double mean, std::int64_t count, double log_t);
double ucb1_tuned_index(double mean, double m2, std::int64_t count,
                        double log_t);
double ucb_v_index(double mean, double m2, std::int64_t count, double log_t,
                   double b, double zeta);

// Index for the UCB kinds; count = 0 yields +infinity.
double ucb_index(PolicyKind kind, const ArmStats& stats, std::int64_t t,
                 const UcbVParams& constants = {});

// 0-based argmax with ties broken uniformly at random; consumes rng only
// when there is an actual tie.
std::size_t argmax_tie_uniform(std::span<const double> scores, RngStream& rng);

class PolicyState {
 public:
  // `noise` carries observation-side randomness (the Bernoulli rounding of
  // fractional rewards in bernoulli_ts); other kinds never consume it.
  PolicyState(PolicySpec spec, int arms, RngStream noise);

  // Returns the 1-based arm to pull. During the forced-exploration phase of
  // ts14, ts20, and the UCB kinds, arms are pulled round-robin (lowest count
  // first, lowest index on ties) without consuming rng.
  int select_arm(RngStream& rng);

  // Per-arm comparison values for the current round: posterior samples for
  // the TS kinds, indices for the UCB kinds.
  std::vector<double> scores(RngStream& rng) const;

  void observe(int arm, double reward);

  const PolicySpec& spec() const noexcept { return spec_; }
  int arms() const noexcept { return arms_; }
  // Round counter: total observations + 1.
  std::int64_t round() const noexcept { return t_; }
  const ArmStats& stats(int arm) const;  // 1-based
  double successes(int arm) const;       // bernoulli_ts only
  double failures(int arm) const;        // bernoulli_ts only
  int forced_pulls() const noexcept { return forced_pulls_; }

 private:
  PolicySpec spec_;
  int arms_ = 0;
  std::int64_t t_ = 1;
  std::vector<ArmStats> stats_;
  std::vector<double> successes_;
  std::vector<double> failures_;
  std::vector<NormalGammaParams> ng_prior_;  // varts/ts14/ts20
  std::vector<GaussianParams> gauss_prior_;  // gaussian_ts
  std::vector<double> known_sigma2_;         // gaussian_ts
  UcbVParams ucb_constants_;
  int forced_pulls_ = 0;
  RngStream noise_;
};

}  // namespace banditlab

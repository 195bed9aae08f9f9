#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "banditlab/rng.hpp"

namespace banditlab {

// Per-arm Gaussian prior over the mean; reward variances are known.
struct GaussianKnownVarEnv {
  std::vector<GaussianParams> prior;
  std::vector<double> sigma2;
};

// Per-arm Normal-Gamma prior over (mean, precision); rewards are Gaussian
// with the drawn variance 1/lambda.
struct GaussianNgEnv {
  std::vector<NormalGammaParams> prior;
};

// Per-arm Beta prior over the mean; rewards are Bernoulli(mu).
struct BernoulliBetaEnv {
  std::vector<BetaParams> prior;
};

// Per-arm Beta prior over the mean; rewards are Beta(s*mu, s*(1-mu)).
struct BetaScaledEnv {
  std::vector<BetaParams> prior;
  double scale = 10.0;
};

class EnvSpec {
 public:
  using Family = std::variant<GaussianKnownVarEnv, GaussianNgEnv,
                              BernoulliBetaEnv, BetaScaledEnv>;

  explicit EnvSpec(Family family);

  int arms() const noexcept { return arms_; }
  // One of: gaussian_known, gaussian, bernoulli, beta.
  std::string_view name() const noexcept;
  const Family& family() const noexcept { return family_; }

 private:
  Family family_;
  int arms_ = 0;
};

enum class EnvKind { bernoulli, beta, gaussian };

// The standard benchmark environments:
//   bernoulli: mu_i ~ Beta(i, K+1-i), Bernoulli(mu_i) rewards
//   beta:      mu_i ~ Beta(i, K+1-i), Beta(10 mu_i, 10 (1-mu_i)) rewards
//   gaussian:  (mu_i, lambda_i) ~ NG(i/(K+1), K, 4, 1), N(mu_i, 1/lambda_i)
EnvSpec make_env_spec(EnvKind kind, int arms);

// A realized bandit: true means and true per-arm reward variances.
struct BanditInstance {
  std::vector<double> mu;
  std::vector<double> sigma2;
};

BanditInstance sample_instance(const EnvSpec& spec, RngStream& rng);

// Arm indices are 1-based everywhere.
double sample_reward(const BanditInstance& instance, const EnvSpec& spec,
                     int arm, RngStream& rng);

struct Optimum {
  int arm = 1;  // 1-based; lowest index wins ties
  double mean = 0.0;
};

Optimum instance_optimum(const BanditInstance& instance);

}  // namespace banditlab

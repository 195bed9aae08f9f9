#include "banditlab/envs.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "banditlab/errors.hpp"

namespace banditlab {
namespace {

constexpr double kMeanClamp = 1e-9;

void check_arm_count(std::size_t arms) {
  if (arms < 1) throw DomainError("env: needs at least one arm");
}

int validate_family(const GaussianKnownVarEnv& env) {
  check_arm_count(env.prior.size());
  if (env.sigma2.size() != env.prior.size()) {
    throw DomainError("gaussian_known: prior and sigma2 lengths differ");
  }
  for (const auto& p : env.prior) validate_params(p);
  for (double s2 : env.sigma2) {
    if (!(s2 >= 0.0) || !std::isfinite(s2)) {
      throw DomainError("gaussian_known: sigma2 entries must be >= 0");
    }
  }
  return static_cast<int>(env.prior.size());
}

int validate_family(const GaussianNgEnv& env) {
  check_arm_count(env.prior.size());
  for (const auto& p : env.prior) {
    validate_params(p);
    if (p.kappa0 == 0.0 || p.beta0 == 0.0) {
      throw DegeneratePriorError(
          "gaussian env: arm priors must have kappa0 > 0 and beta0 > 0");
    }
  }
  return static_cast<int>(env.prior.size());
}

int validate_family(const BernoulliBetaEnv& env) {
  check_arm_count(env.prior.size());
  for (const auto& p : env.prior) validate_params(p);
  return static_cast<int>(env.prior.size());
}

int validate_family(const BetaScaledEnv& env) {
  check_arm_count(env.prior.size());
  for (const auto& p : env.prior) validate_params(p);
  if (!(env.scale > 0.0) || !std::isfinite(env.scale)) {
    throw DomainError("beta env: scale must be positive");
  }
  return static_cast<int>(env.prior.size());
}

std::vector<BetaParams> ramp_beta_priors(int arms) {
  std::vector<BetaParams> prior(static_cast<std::size_t>(arms));
  for (int i = 1; i <= arms; ++i) {
    prior[static_cast<std::size_t>(i - 1)] = {static_cast<double>(i),
                                              static_cast<double>(arms + 1 - i)};
  }
  return prior;
}

}  // namespace

EnvSpec::EnvSpec(Family family) : family_(std::move(family)) {
  arms_ = std::visit([](const auto& env) { return validate_family(env); },
                     family_);
}

std::string_view EnvSpec::name() const noexcept {
  struct Namer {
    std::string_view operator()(const GaussianKnownVarEnv&) const {
      return "gaussian_known";
    }
    std::string_view operator()(const GaussianNgEnv&) const {
      return "gaussian";
    }
    std::string_view operator()(const BernoulliBetaEnv&) const {
      return "bernoulli";
    }
    std::string_view operator()(const BetaScaledEnv&) const { return "beta"; }
  };
  return std::visit(Namer{}, family_);
}

EnvSpec make_env_spec(EnvKind kind, int arms) {
  if (arms < 1) throw DomainError("make_env_spec: arms must be >= 1");
  switch (kind) {
    case EnvKind::bernoulli:
      return EnvSpec(BernoulliBetaEnv{ramp_beta_priors(arms)});
    case EnvKind::beta:
      return EnvSpec(BetaScaledEnv{ramp_beta_priors(arms), 10.0});
    case EnvKind::gaussian: {
      std::vector<NormalGammaParams> prior(static_cast<std::size_t>(arms));
      for (int i = 1; i <= arms; ++i) {
        prior[static_cast<std::size_t>(i - 1)] = {
            static_cast<double>(i) / (arms + 1), static_cast<double>(arms),
            4.0, 1.0};
      }
      return EnvSpec(GaussianNgEnv{std::move(prior)});
    }
  }
  throw DomainError("make_env_spec: unknown kind");
}

BanditInstance sample_instance(const EnvSpec& spec, RngStream& rng) {
  const std::size_t arms = static_cast<std::size_t>(spec.arms());
  BanditInstance instance;
  instance.mu.resize(arms);
  instance.sigma2.resize(arms);

  struct Drawer {
    BanditInstance& out;
    RngStream& rng;

    void operator()(const GaussianKnownVarEnv& env) const {
      for (std::size_t i = 0; i < out.mu.size(); ++i) {
        out.mu[i] = sample(env.prior[i], rng);
        out.sigma2[i] = env.sigma2[i];
      }
    }
    void operator()(const GaussianNgEnv& env) const {
      for (std::size_t i = 0; i < out.mu.size(); ++i) {
        const auto [mu, lambda] = sample_normal_gamma(env.prior[i], rng);
        out.mu[i] = mu;
        out.sigma2[i] = 1.0 / lambda;
      }
    }
    void operator()(const BernoulliBetaEnv& env) const {
      for (std::size_t i = 0; i < out.mu.size(); ++i) {
        const double mu = sample(env.prior[i], rng);
        out.mu[i] = mu;
        out.sigma2[i] = mu * (1.0 - mu);
      }
    }
    void operator()(const BetaScaledEnv& env) const {
      for (std::size_t i = 0; i < out.mu.size(); ++i) {
        const double mu = sample(env.prior[i], rng);
        out.mu[i] = mu;
        out.sigma2[i] = mu * (1.0 - mu) / (env.scale + 1.0);
      }
    }
  };
  std::visit(Drawer{instance, rng}, spec.family());
  return instance;
}

double sample_reward(const BanditInstance& instance, const EnvSpec& spec,
                     int arm, RngStream& rng) {
  if (arm < 1 || arm > spec.arms()) {
    throw IndexError("sample_reward: arm index out of range [1, K]");
  }
  const std::size_t i = static_cast<std::size_t>(arm - 1);
  if (instance.mu.size() != static_cast<std::size_t>(spec.arms()) ||
      instance.sigma2.size() != instance.mu.size()) {
    throw DomainError("sample_reward: instance does not match spec");
  }

  struct Drawer {
    const BanditInstance& instance;
    std::size_t i;
    RngStream& rng;

    double operator()(const GaussianKnownVarEnv&) const {
      return sample(GaussianParams{instance.mu[i], instance.sigma2[i]}, rng);
    }
    double operator()(const GaussianNgEnv&) const {
      return sample(GaussianParams{instance.mu[i], instance.sigma2[i]}, rng);
    }
    double operator()(const BernoulliBetaEnv&) const {
      return sample(BernoulliParams{instance.mu[i]}, rng);
    }
    double operator()(const BetaScaledEnv& env) const {
      const double mu =
          std::clamp(instance.mu[i], kMeanClamp, 1.0 - kMeanClamp);
      return sample(BetaParams{env.scale * mu, env.scale * (1.0 - mu)}, rng);
    }
  };
  return std::visit(Drawer{instance, i, rng}, spec.family());
}

Optimum instance_optimum(const BanditInstance& instance) {
  if (instance.mu.empty()) {
    throw DomainError("instance_optimum: empty instance");
  }
  Optimum best{1, instance.mu[0]};
  for (std::size_t i = 1; i < instance.mu.size(); ++i) {
    if (instance.mu[i] > best.mean) {
      best = {static_cast<int>(i) + 1, instance.mu[i]};
    }
  }
  return best;
}

}  // namespace banditlab

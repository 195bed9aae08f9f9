#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "banditlab/envs.hpp"
#include "banditlab/policies.hpp"
#include "banditlab/prior_fit.hpp"
#include "banditlab/runner.hpp"

namespace banditlab {

// Experiment configuration text format
// ------------------------------------
// Line-oriented sections of `key = value` pairs. `#` starts a comment
// anywhere on a line; blank lines are ignored; unknown sections or keys are
// errors. Real-list values are comma-separated and may be a single scalar
// (broadcast to all arms) or exactly K values.
//
//   [env]
//   kind = bernoulli | beta | gaussian | gaussian_known   (required)
//   k = <int >= 1>                                        (required)
//   scale = <real > 0>                  # beta only
//   mu0, kappa0, alpha0, beta0 = <real-list>              # gaussian only
//   prior_mean, prior_var, reward_var = <real-list>       # gaussian_known only
//
//   [run]
//   seed = <unsigned 64-bit>                              (required)
//   horizon = <int >= 1>                # default 2000
//   runs = <int >= 1>                   # default 1000
//   record_every = <int >= 1>           # default 1
//
//   [output]
//   dir = <path>                        # default output directory
//
//   [bound]
//   delta = <real in (0, 1]>            # default 1/horizon
//
//   [policy]                            # repeatable, one per policy
//   kind = gaussian_ts | varts | ts14 | ts20 | bernoulli_ts
//        | ucb1 | ucb1_tuned | ucb_v                      (required)
//   # gaussian_ts: prior_mean (default 0), prior_var (default 1),
//   #              reward_var (default 1), each scalar or K values
//   # varts: either mu0/kappa0/alpha0/beta0 (all four, scalar or K values)
//   #        or prior = env | fit (default: env on gaussian, else fit);
//   #        fit_samples = <int >= 2> (default 100000);
//   #        forced_pulls = <int >= 0> (default 0)
//   # ts14: alpha = <real > 0> (default 0.5)
//   # ucb_v: b = <real > 0> (default 1), zeta = <real > 0> (default 1.2)

struct EnvConfig {
  std::string kind;
  int arms = 0;
  std::optional<double> scale;
  // Empty vectors mean "use the kind's default"; otherwise scalar or K values.
  std::vector<double> mu0, kappa0, alpha0, beta0;
  std::vector<double> prior_mean, prior_var, reward_var;
};

enum class VartsPriorSource { automatic, env, fit, explicit_params };

struct PolicyConfig {
  PolicyKind kind = PolicyKind::ucb1;
  double ts14_alpha = 0.5;
  double ucb_b = 1.0;
  double ucb_zeta = 1.2;
  std::vector<double> prior_mean, prior_var, reward_var;  // gaussian_ts
  std::vector<double> mu0, kappa0, alpha0, beta0;         // varts explicit
  VartsPriorSource varts_prior = VartsPriorSource::automatic;
  int fit_samples = 100000;
  int forced_pulls = 0;
};

struct CliConfig {
  EnvConfig env;
  std::vector<PolicyConfig> policies;
  int horizon = 2000;
  int runs = 1000;
  std::uint64_t seed = 0;
  int record_every = 1;
  std::optional<std::string> out_dir;
  std::optional<double> bound_delta;
};

// Strict parse; throws ConfigError with 1-based line/column on any syntax
// error, unknown section/key, or domain violation.
CliConfig parse_config(const std::string& text);

// Realizes the configured environment. arms_override > 0 replaces the
// configured K (per-arm parameter lists then must be scalars).
EnvSpec build_env(const EnvConfig& env, int arms_override = 0);

// Per-arm Normal-Gamma priors estimated from `samples` draws of the env
// prior via fit_from_variance_moments.
std::vector<NormalGammaParams> fit_varts_priors(const EnvSpec& env,
                                                int samples, RngStream rng);

// Resolves policies (including varts prior fitting, which consumes the
// stream RngStream(seed).derive(1)) into a runnable experiment.
ExperimentConfig build_experiment(const CliConfig& config,
                                  int arms_override = 0);

// One real per line; `#` comments and blank lines allowed.
std::vector<double> read_sample_file(const std::filesystem::path& path);

}  // namespace banditlab

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "banditlab/envs.hpp"
#include "banditlab/policies.hpp"
#include "banditlab/rng.hpp"

namespace banditlab {

struct ExperimentConfig {
  EnvSpec env;
  std::vector<PolicySpec> policies;
  int horizon = 2000;
  int runs = 1000;
  std::uint64_t root_seed = 0;
  int record_every = 1;
};

// Cumulative pseudo-regret after each round, computed from true means.
struct RegretTrajectory {
  std::vector<double> cumulative;
};

struct AggregateCurve {
  std::vector<std::int64_t> rounds;
  std::vector<double> mean_regret;
  std::vector<double> stderr_regret;  // sample-std / sqrt(runs); 0 for runs=1
  std::int64_t runs = 0;
};

// Multiples of record_every up to the horizon, with the final round always
// included.
std::vector<std::int64_t> recorded_rounds(int horizon, int record_every);

// Core episode loop over any agent exposing
//   int select_arm(RngStream&)   (1-based arm)
//   void observe(int arm, double reward)
// Useful for plugging stub agents into the regret accounting.
template <class Agent>
RegretTrajectory run_rounds(Agent& agent, const BanditInstance& instance,
                            const EnvSpec& env, int horizon,
                            RngStream& select_rng, RngStream& reward_rng) {
  const Optimum best = instance_optimum(instance);
  RegretTrajectory out;
  out.cumulative.reserve(static_cast<std::size_t>(horizon));
  double cumulative = 0.0;
  for (int t = 1; t <= horizon; ++t) {
    const int arm = agent.select_arm(select_rng);
    const double reward = sample_reward(instance, env, arm, reward_rng);
    agent.observe(arm, reward);
    cumulative += best.mean - instance.mu[static_cast<std::size_t>(arm - 1)];
    out.cumulative.push_back(cumulative);
  }
  return out;
}

// One Monte-Carlo episode: samples an instance from the env prior, runs the
// policy for `horizon` rounds, returns the pseudo-regret trajectory.
// Substreams of rng: 0 = instance draw, 1 = policy (its child 0 feeds
// observation noise, child 1 selection), 2 = rewards. Policies sharing the
// same rng thus face identical instances and reward draws.
RegretTrajectory run_episode(const PolicySpec& policy, const EnvSpec& env,
                             int horizon, const RngStream& rng);

// Mean/stderr across equal-length trajectories at the recorded rounds.
AggregateCurve aggregate(std::span<const RegretTrajectory> trajectories,
                         int record_every);

// Runs `config.runs` episodes per policy and aggregates. The episode stream
// for run r is RngStream(root_seed).derive(0).derive(r), identical for every
// policy (common random numbers). Output is byte-identical for any worker
// count; workers < 1 is treated as 1.
std::vector<AggregateCurve> run_experiment(const ExperimentConfig& config,
                                           int workers = 1);

}  // namespace banditlab

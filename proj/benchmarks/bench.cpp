#include <benchmark/benchmark.h>

#include <vector>

#include "banditlab/envs.hpp"
#include "banditlab/hier_reg.hpp"
#include "banditlab/policies.hpp"
#include "banditlab/rng.hpp"
#include "banditlab/runner.hpp"

namespace {

using namespace banditlab;

void bm_gamma_sample(benchmark::State& state) {
  RngStream rng(42);
  const GammaParams dist{static_cast<double>(state.range(0)) / 2.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(dist, rng));
  }
}
BENCHMARK(bm_gamma_sample)->Arg(1)->Arg(4)->Arg(64);

void bm_normal_gamma_sample(benchmark::State& state) {
  RngStream rng(42);
  const NormalGammaParams prior{0.0, 10.0, 4.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_normal_gamma(prior, rng));
  }
}
BENCHMARK(bm_normal_gamma_sample);

void bm_select(benchmark::State& state, PolicySpec (*make)(int), int arms) {
  RngStream rng(7);
  PolicyState policy(make(arms), arms, rng.derive(0));
  RngStream select_rng = rng.derive(1);
  RngStream reward_rng = rng.derive(2);
  // Warm past any forced-exploration phase.
  for (int i = 0; i < 2 * arms; ++i) {
    const int arm = policy.select_arm(select_rng);
    policy.observe(arm, reward_rng.next_unit());
  }
  for (auto _ : state) {
    const int arm = policy.select_arm(select_rng);
    policy.observe(arm, reward_rng.next_unit());
  }
}

PolicySpec make_varts(int arms) {
  return PolicySpec::varts(
      std::vector<NormalGammaParams>(static_cast<std::size_t>(arms),
                                     NormalGammaParams{0.5, 10.0, 4.0, 1.0}));
}
PolicySpec make_gaussian_ts(int arms) {
  return PolicySpec::gaussian_ts_default(arms);
}
PolicySpec make_ucb1(int) { return PolicySpec::ucb1(); }

BENCHMARK_CAPTURE(bm_select, varts_k2, &make_varts, 2);
BENCHMARK_CAPTURE(bm_select, varts_k32, &make_varts, 32);
BENCHMARK_CAPTURE(bm_select, gaussian_ts_k2, &make_gaussian_ts, 2);
BENCHMARK_CAPTURE(bm_select, gaussian_ts_k32, &make_gaussian_ts, 32);
BENCHMARK_CAPTURE(bm_select, ucb1_k2, &make_ucb1, 2);
BENCHMARK_CAPTURE(bm_select, ucb1_k32, &make_ucb1, 32);

void bm_episode(benchmark::State& state) {
  const int arms = static_cast<int>(state.range(0));
  const EnvSpec env = make_env_spec(EnvKind::gaussian, arms);
  const PolicySpec policy = make_varts(arms);
  const RngStream root(11);
  std::uint64_t run = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_episode(policy, env, 2000, root.derive(run++)));
  }
}
BENCHMARK(bm_episode)->Arg(10)->Arg(32)->Unit(benchmark::kMillisecond);

TaskData make_task(RngStream& rng, int rows, int cols) {
  TaskData task;
  task.x.resize(rows, cols);
  task.y.resize(rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      task.x(r, c) = 2.0 * rng.next_unit() - 1.0;
    }
    task.y(r) = 2.0 * rng.next_unit() - 1.0;
  }
  return task;
}

void bm_hier_posterior(benchmark::State& state, bool woodbury) {
  const int k = 8;
  const int rows = 64;
  RngStream rng(3);
  HierPrior prior{Eigen::VectorXd::Zero(k),
                  Eigen::MatrixXd::Identity(k, k)};
  const Eigen::MatrixXd sigma = Eigen::MatrixXd::Identity(k, k) * 0.5;
  std::vector<TaskData> tasks;
  for (int t = 0; t < 10; ++t) tasks.push_back(make_task(rng, rows, k));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        woodbury ? posterior_woodbury(prior, sigma, 1.0, tasks)
                 : posterior_direct(prior, sigma, 1.0, tasks));
  }
}
BENCHMARK_CAPTURE(bm_hier_posterior, direct, false)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(bm_hier_posterior, woodbury, true)
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

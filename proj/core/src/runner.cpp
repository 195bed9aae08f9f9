#include "banditlab/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <thread>
#include <utility>

#include "banditlab/errors.hpp"

namespace banditlab {
namespace {

void validate_experiment(const ExperimentConfig& config) {
  if (config.horizon < 1) throw DomainError("experiment: horizon must be >= 1");
  if (config.runs < 1) throw DomainError("experiment: runs must be >= 1");
  if (config.record_every < 1) {
    throw DomainError("experiment: record_every must be >= 1");
  }
  if (config.policies.empty()) {
    throw DomainError("experiment: needs at least one policy");
  }
}

struct WelfordCell {
  double mean = 0.0;
  double m2 = 0.0;

  void add(std::int64_t count, double x) {
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
};

AggregateCurve finalize_curve(std::vector<std::int64_t> rounds,
                              const std::vector<WelfordCell>& cells,
                              std::int64_t runs) {
  AggregateCurve curve;
  curve.rounds = std::move(rounds);
  curve.runs = runs;
  curve.mean_regret.reserve(cells.size());
  curve.stderr_regret.reserve(cells.size());
  for (const WelfordCell& cell : cells) {
    curve.mean_regret.push_back(cell.mean);
    const double se =
        runs > 1 ? std::sqrt(cell.m2 / static_cast<double>(runs - 1) /
                             static_cast<double>(runs))
                 : 0.0;
    curve.stderr_regret.push_back(se);
  }
  return curve;
}

}  // namespace

std::vector<std::int64_t> recorded_rounds(int horizon, int record_every) {
  if (horizon < 1) throw DomainError("recorded_rounds: horizon must be >= 1");
  if (record_every < 1) {
    throw DomainError("recorded_rounds: record_every must be >= 1");
  }
  std::vector<std::int64_t> rounds;
  for (std::int64_t r = record_every; r <= horizon; r += record_every) {
    rounds.push_back(r);
  }
  if (rounds.empty() || rounds.back() != horizon) rounds.push_back(horizon);
  return rounds;
}

RegretTrajectory run_episode(const PolicySpec& policy, const EnvSpec& env,
                             int horizon, const RngStream& rng) {
  if (horizon < 1) throw DomainError("run_episode: horizon must be >= 1");
  RngStream instance_rng = rng.derive(0);
  const RngStream policy_rng = rng.derive(1);
  RngStream reward_rng = rng.derive(2);
  const BanditInstance instance = sample_instance(env, instance_rng);
  PolicyState state(policy, env.arms(), policy_rng.derive(0));
  RngStream select_rng = policy_rng.derive(1);
  return run_rounds(state, instance, env, horizon, select_rng, reward_rng);
}

AggregateCurve aggregate(std::span<const RegretTrajectory> trajectories,
                         int record_every) {
  if (trajectories.empty()) throw DataError("aggregate: no trajectories");
  const std::size_t horizon = trajectories[0].cumulative.size();
  if (horizon == 0) throw DataError("aggregate: empty trajectory");
  for (const RegretTrajectory& trajectory : trajectories) {
    if (trajectory.cumulative.size() != horizon) {
      throw DataError("aggregate: trajectories must have equal length");
    }
  }
  std::vector<std::int64_t> rounds =
      recorded_rounds(static_cast<int>(horizon), record_every);
  std::vector<WelfordCell> cells(rounds.size());
  std::int64_t count = 0;
  for (const RegretTrajectory& trajectory : trajectories) {
    ++count;
    for (std::size_t j = 0; j < rounds.size(); ++j) {
      cells[j].add(count,
                   trajectory.cumulative[static_cast<std::size_t>(rounds[j]) - 1]);
    }
  }
  return finalize_curve(std::move(rounds), cells, count);
}

std::vector<AggregateCurve> run_experiment(const ExperimentConfig& config,
                                           int workers) {
  validate_experiment(config);
  const std::vector<std::int64_t> rounds =
      recorded_rounds(config.horizon, config.record_every);
  const std::size_t n_rec = rounds.size();
  const std::size_t n_pol = config.policies.size();

  std::vector<std::vector<WelfordCell>> cells(
      n_pol, std::vector<WelfordCell>(n_rec));

  const RngStream runs_branch = RngStream(config.root_seed).derive(0);
  const int n_workers = std::max(1, workers);
  // Slots are computed in parallel but folded strictly in run order, so the
  // aggregate is byte-identical for any worker count or window size.
  const int window = n_workers * 4;

  // [slot][policy][recorded round]
  std::vector<std::vector<std::vector<double>>> slots(
      static_cast<std::size_t>(window));

  const auto compute_run = [&](int r, std::vector<std::vector<double>>& slot) {
    const RngStream episode_rng =
        runs_branch.derive(static_cast<std::uint64_t>(r));
    slot.assign(n_pol, std::vector<double>(n_rec));
    for (std::size_t p = 0; p < n_pol; ++p) {
      const RegretTrajectory trajectory = run_episode(
          config.policies[p], config.env, config.horizon, episode_rng);
      for (std::size_t j = 0; j < n_rec; ++j) {
        slot[p][j] =
            trajectory.cumulative[static_cast<std::size_t>(rounds[j]) - 1];
      }
    }
  };

  for (int window_start = 0; window_start < config.runs;
       window_start += window) {
    const int window_end = std::min(config.runs, window_start + window);
    if (n_workers == 1) {
      for (int r = window_start; r < window_end; ++r) {
        compute_run(r, slots[static_cast<std::size_t>(r - window_start)]);
      }
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(
          static_cast<std::size_t>(n_workers));
      for (int w = 0; w < n_workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (int r = window_start + w; r < window_end; r += n_workers) {
              compute_run(r, slots[static_cast<std::size_t>(r - window_start)]);
            }
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
          }
        });
      }
      for (std::thread& t : pool) t.join();
      for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (int r = window_start; r < window_end; ++r) {
      const auto& slot = slots[static_cast<std::size_t>(r - window_start)];
      for (std::size_t p = 0; p < n_pol; ++p) {
        for (std::size_t j = 0; j < n_rec; ++j) {
          cells[p][j].add(r + 1, slot[p][j]);
        }
      }
    }
  }

  std::vector<AggregateCurve> curves;
  curves.reserve(n_pol);
  for (std::size_t p = 0; p < n_pol; ++p) {
    curves.push_back(finalize_curve(rounds, cells[p], config.runs));
  }
  return curves;
}

}  // namespace banditlab

#include "banditlab/policies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "banditlab/errors.hpp"

namespace banditlab {
namespace {

constexpr double kBetaFloor = 1e-12;

void check_finite_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

std::string_view policy_kind_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::gaussian_ts: return "gaussian_ts";
    case PolicyKind::varts: return "varts";
    case PolicyKind::ts14: return "ts14";
    case PolicyKind::ts20: return "ts20";
    case PolicyKind::bernoulli_ts: return "bernoulli_ts";
    case PolicyKind::ucb1: return "ucb1";
    case PolicyKind::ucb1_tuned: return "ucb1_tuned";
    case PolicyKind::ucb_v: return "ucb_v";
  }
  throw DomainError("policy_kind_name: unknown kind");
}

void ArmStats::add(double x) {
  ++count;
  const double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

PolicySpec PolicySpec::gaussian_ts(std::vector<GaussianParams> prior,
                                   std::vector<double> sigma2) {
  return {PolicyKind::gaussian_ts,
          GaussianTsParams{std::move(prior), std::move(sigma2)}};
}

PolicySpec PolicySpec::gaussian_ts_default(int arms) {
  if (arms < 1) throw DomainError("gaussian_ts_default: arms must be >= 1");
  return gaussian_ts(std::vector<GaussianParams>(
                         static_cast<std::size_t>(arms), GaussianParams{0.0, 1.0}),
                     std::vector<double>(static_cast<std::size_t>(arms), 1.0));
}

PolicySpec PolicySpec::varts(std::vector<NormalGammaParams> prior,
                             int forced_pulls) {
  return {PolicyKind::varts, VartsParams{std::move(prior), forced_pulls}};
}

PolicySpec PolicySpec::ts14(double alpha) {
  return {PolicyKind::ts14, Ts14Params{alpha}};
}

PolicySpec PolicySpec::ts20() { return {PolicyKind::ts20, std::monostate{}}; }

PolicySpec PolicySpec::bernoulli_ts() {
  return {PolicyKind::bernoulli_ts, std::monostate{}};
}

PolicySpec PolicySpec::ucb1() { return {PolicyKind::ucb1, std::monostate{}}; }

PolicySpec PolicySpec::ucb1_tuned() {
  return {PolicyKind::ucb1_tuned, std::monostate{}};
}

PolicySpec PolicySpec::ucb_v(double b, double zeta) {
  return {PolicyKind::ucb_v, UcbVParams{b, zeta}};
}

GaussianPosterior gaussian_ts_posterior(const GaussianParams& prior,
                                        double known_sigma2,
                                        const ArmStats& stats) {
  validate_params(prior);
  if (!(known_sigma2 > 0.0) || !std::isfinite(known_sigma2)) {
    throw DomainError("gaussian_ts_posterior: known_sigma2 must be positive");
  }
  if (prior.variance == 0.0) return {prior.mean, 0.0};
  if (stats.count == 0) return {prior.mean, prior.variance};
  const double n = static_cast<double>(stats.count);
  const double precision = 1.0 / prior.variance + n / known_sigma2;
  const double variance = 1.0 / precision;
  const double mean =
      variance * (prior.mean / prior.variance + n * stats.mean / known_sigma2);
  return {mean, variance};
}

NormalGammaParams varts_posterior(const NormalGammaParams& prior,
                                  const ArmStats& stats) {
  validate_params(prior);
  if (prior.kappa0 == 0.0 && stats.count == 0) {
    throw DegeneratePriorError(
        "varts_posterior: kappa0 = 0 requires at least one observation");
  }
  if (stats.count == 0) return prior;
  const double n = static_cast<double>(stats.count);
  const double kappa = prior.kappa0 + n;
  const double alpha = prior.alpha0 + 0.5 * n;
  const double gap = stats.mean - prior.mu0;
  const double beta =
      prior.beta0 + 0.5 * stats.m2 + 0.5 * prior.kappa0 * n * gap * gap / kappa;
  const double mu = (prior.kappa0 * prior.mu0 + n * stats.mean) / kappa;
  return {mu, kappa, alpha, beta};
}

double ucb1_index(double mean, std::int64_t count, double log_t) {
  if (count == 0) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(count);
  return mean + std::sqrt(2.0 * log_t / n);
}

double ucb1_tuned_index(double mean, double m2, std::int64_t count,
                        double log_t) {
  if (count == 0) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(count);
  const double v = m2 / n;
  return mean +
         std::sqrt(log_t / n * std::min(0.25, v + std::sqrt(2.0 * log_t / n)));
}

double ucb_v_index(double mean, double m2, std::int64_t count, double log_t,
                   double b, double zeta) {
  if (count == 0) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(count);
  const double v = m2 / n;
  return mean + std::sqrt(2.0 * v * zeta * log_t / n) +
         3.0 * b * zeta * log_t / n;
}

double ucb_index(PolicyKind kind, const ArmStats& stats, std::int64_t t,
                 const UcbVParams& constants) {
  if (t < 1) throw DomainError("ucb_index: t must be >= 1");
  const double log_t = std::log(static_cast<double>(t));
  switch (kind) {
    case PolicyKind::ucb1:
      return ucb1_index(stats.mean, stats.count, log_t);
    case PolicyKind::ucb1_tuned:
      return ucb1_tuned_index(stats.mean, stats.m2, stats.count, log_t);
    case PolicyKind::ucb_v:
      return ucb_v_index(stats.mean, stats.m2, stats.count, log_t, constants.b,
                         constants.zeta);
    default:
      throw DomainError("ucb_index: not an index policy kind");
  }
}

std::size_t argmax_tie_uniform(std::span<const double> scores,
                               RngStream& rng) {
  if (scores.empty()) throw DataError("argmax: empty score vector");
  for (double s : scores) {
    if (std::isnan(s)) throw DataError("argmax: NaN score");
  }
  std::size_t first = 0;
  double best = scores[0];
  std::size_t ties = 1;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > best) {
      best = scores[i];
      first = i;
      ties = 1;
    } else if (scores[i] == best) {
      ++ties;
    }
  }
  if (ties == 1) return first;
  std::uint64_t pick = rng.next_below(ties);
  for (std::size_t i = first; i < scores.size(); ++i) {
    if (scores[i] == best) {
      if (pick == 0) return i;
      --pick;
    }
  }
  throw DataError("argmax: tie scan failed");
}

PolicyState::PolicyState(PolicySpec spec, int arms, RngStream noise)
    : spec_(std::move(spec)), arms_(arms), noise_(std::move(noise)) {
  if (arms_ < 1) throw DomainError("policy: needs at least one arm");
  const std::size_t k = static_cast<std::size_t>(arms_);
  stats_.resize(k);

  switch (spec_.kind) {
    case PolicyKind::gaussian_ts: {
      const auto* p = std::get_if<GaussianTsParams>(&spec_.params);
      if (p == nullptr) {
        throw DomainError("gaussian_ts: missing per-arm parameters");
      }
      if (p->prior.size() != k || p->sigma2.size() != k) {
        throw DomainError("gaussian_ts: parameter lengths must equal arms");
      }
      for (const auto& g : p->prior) validate_params(g);
      for (double s2 : p->sigma2) check_finite_positive(s2, "gaussian_ts: sigma2");
      gauss_prior_ = p->prior;
      known_sigma2_ = p->sigma2;
      break;
    }
    case PolicyKind::varts: {
      const auto* p = std::get_if<VartsParams>(&spec_.params);
      if (p == nullptr) throw DomainError("varts: missing per-arm parameters");
      if (p->prior.size() != k) {
        throw DomainError("varts: prior length must equal arms");
      }
      if (p->forced_pulls < 0) {
        throw DomainError("varts: forced_pulls must be >= 0");
      }
      for (const auto& ng : p->prior) {
        validate_params(ng);
        if (ng.kappa0 == 0.0 && p->forced_pulls < 1) {
          throw DegeneratePriorError(
              "varts: kappa0 = 0 requires at least one forced pull per arm");
        }
      }
      ng_prior_ = p->prior;
      forced_pulls_ = p->forced_pulls;
      break;
    }
    case PolicyKind::ts14: {
      double alpha = 0.5;
      if (const auto* p = std::get_if<Ts14Params>(&spec_.params)) {
        alpha = p->alpha;
      } else if (!std::holds_alternative<std::monostate>(spec_.params)) {
        throw DomainError("ts14: unexpected parameter payload");
      }
      check_finite_positive(alpha, "ts14: alpha");
      ng_prior_.assign(k, NormalGammaParams{0.0, 0.0, alpha, 0.0});
      forced_pulls_ = 2;
      break;
    }
    case PolicyKind::ts20:
      if (!std::holds_alternative<std::monostate>(spec_.params)) {
        throw DomainError("ts20: takes no parameters");
      }
      ng_prior_.assign(k, NormalGammaParams{0.0, 0.0, 0.5, 0.5});
      forced_pulls_ = 1;
      break;
    case PolicyKind::bernoulli_ts:
      if (!std::holds_alternative<std::monostate>(spec_.params)) {
        throw DomainError("bernoulli_ts: takes no parameters");
      }
      successes_.assign(k, 0.0);
      failures_.assign(k, 0.0);
      break;
    case PolicyKind::ucb1:
    case PolicyKind::ucb1_tuned:
      if (!std::holds_alternative<std::monostate>(spec_.params)) {
        throw DomainError("ucb: takes no parameters");
      }
      forced_pulls_ = 1;
      break;
    case PolicyKind::ucb_v: {
      if (const auto* p = std::get_if<UcbVParams>(&spec_.params)) {
        check_finite_positive(p->b, "ucb_v: b");
        check_finite_positive(p->zeta, "ucb_v: zeta");
        ucb_constants_ = *p;
      } else if (!std::holds_alternative<std::monostate>(spec_.params)) {
        throw DomainError("ucb_v: unexpected parameter payload");
      }
      forced_pulls_ = 1;
      break;
    }
  }
}

const ArmStats& PolicyState::stats(int arm) const {
  if (arm < 1 || arm > arms_) throw IndexError("stats: arm out of range");
  return stats_[static_cast<std::size_t>(arm - 1)];
}

double PolicyState::successes(int arm) const {
  if (spec_.kind != PolicyKind::bernoulli_ts) {
    throw DomainError("successes: only defined for bernoulli_ts");
  }
  if (arm < 1 || arm > arms_) throw IndexError("successes: arm out of range");
  return successes_[static_cast<std::size_t>(arm - 1)];
}

double PolicyState::failures(int arm) const {
  if (spec_.kind != PolicyKind::bernoulli_ts) {
    throw DomainError("failures: only defined for bernoulli_ts");
  }
  if (arm < 1 || arm > arms_) throw IndexError("failures: arm out of range");
  return failures_[static_cast<std::size_t>(arm - 1)];
}

int PolicyState::select_arm(RngStream& rng) {
  if (forced_pulls_ > 0) {
    int arm = 0;
    std::int64_t lowest = forced_pulls_;
    for (int i = 0; i < arms_; ++i) {
      const std::int64_t c = stats_[static_cast<std::size_t>(i)].count;
      if (c < lowest) {
        lowest = c;
        arm = i + 1;
      }
    }
    if (arm != 0) return arm;
  }
  const std::vector<double> s = scores(rng);
  return static_cast<int>(argmax_tie_uniform(s, rng)) + 1;
}

std::vector<double> PolicyState::scores(RngStream& rng) const {
  std::vector<double> out(static_cast<std::size_t>(arms_));
  switch (spec_.kind) {
    case PolicyKind::gaussian_ts:
      for (std::size_t i = 0; i < out.size(); ++i) {
        const GaussianPosterior post =
            gaussian_ts_posterior(gauss_prior_[i], known_sigma2_[i], stats_[i]);
        out[i] = sample(GaussianParams{post.mean, post.variance}, rng);
      }
      break;
    case PolicyKind::varts:
    case PolicyKind::ts14:
    case PolicyKind::ts20:
      for (std::size_t i = 0; i < out.size(); ++i) {
        const NormalGammaParams post = varts_posterior(ng_prior_[i], stats_[i]);
        const double beta_eff = post.beta0 > 0.0 ? post.beta0 : kBetaFloor;
        const double lambda = sample(GammaParams{post.alpha0, beta_eff}, rng);
        if (!(lambda > 0.0)) {
          throw DomainError("varts: sampled precision underflowed");
        }
        out[i] =
            sample(GaussianParams{post.mu0, 1.0 / (post.kappa0 * lambda)}, rng);
      }
      break;
    case PolicyKind::bernoulli_ts:
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = sample(
            BetaParams{1.0 + successes_[i], 1.0 + failures_[i]}, rng);
      }
      break;
    default:
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = ucb_index(spec_.kind, stats_[i], t_, ucb_constants_);
      }
      break;
  }
  return out;
}

void PolicyState::observe(int arm, double reward) {
  if (arm < 1 || arm > arms_) throw IndexError("observe: arm out of range");
  if (!std::isfinite(reward)) {
    throw DataError("observe: reward must be finite");
  }
  const std::size_t i = static_cast<std::size_t>(arm - 1);
  stats_[i].add(reward);
  if (spec_.kind == PolicyKind::bernoulli_ts) {
    const double clipped = std::clamp(reward, 0.0, 1.0);
    const double draw = sample(BernoulliParams{clipped}, noise_);
    if (draw == 1.0) {
      successes_[i] += 1.0;
    } else {
      failures_[i] += 1.0;
    }
  }
  ++t_;
}

}  // namespace banditlab

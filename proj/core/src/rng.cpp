#include "banditlab/rng.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "banditlab/errors.hpp"

namespace banditlab {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t combine(std::uint64_t key, std::uint64_t index) {
  return mix64(key + kGolden + mix64(index + kGolden));
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

double require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": sample is not finite");
  }
  return x;
}

double standard_normal(RngStream& rng) {
  // Marsaglia polar method.
  for (;;) {
    const double u = 2.0 * rng.next_unit() - 1.0;
    const double v = 2.0 * rng.next_unit() - 1.0;
    const double s = u * u + v * v;
    if (s >= 1.0 || s == 0.0) continue;
    return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

// Marsaglia-Tsang, rate 1. For shape < 1 uses the boost
// Gamma(shape) = Gamma(shape + 1) * U^(1/shape).
double standard_gamma(double shape, RngStream& rng) {
  double boost = 1.0;
  if (shape < 1.0) {
    boost = std::pow(rng.next_unit_open(), 1.0 / shape);
    shape += 1.0;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_unit_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return boost * d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return boost * d * v;
    }
  }
}

}  // namespace

RngStream::RngStream(std::uint64_t root_seed)
    : RngStream(root_seed, {}, mix64(root_seed + kGolden)) {}

RngStream::RngStream(std::uint64_t root_seed, std::vector<std::uint64_t> path,
                     std::uint64_t key)
    : root_seed_(root_seed), path_(std::move(path)), key_(key) {
  // Expand the identity key into xoshiro256++ state via SplitMix64.
  std::uint64_t z = key_;
  for (auto& word : state_) {
    z += kGolden;
    word = mix64(z);
  }
}

RngStream RngStream::derive(std::uint64_t index) const {
  std::vector<std::uint64_t> child_path = path_;
  child_path.push_back(index);
  return RngStream(root_seed_, std::move(child_path), combine(key_, index));
}

std::uint64_t RngStream::next_u64() {
  // xoshiro256++
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RngStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_unit_open() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
  if (n == 0) throw DomainError("next_below: n must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t x;
  std::uint64_t r;
  do {
    x = next_u64();
    r = x % n;
  } while (x - r > max - (n - 1));
  return r;
}

RngStream derive_stream(const RngStream& parent, std::uint64_t index) {
  return parent.derive(index);
}

void validate_params(const GaussianParams& params) {
  if (!std::isfinite(params.mean) || !(params.variance >= 0.0) ||
      !std::isfinite(params.variance)) {
    throw DomainError("gaussian: mean must be finite and variance >= 0");
  }
}

void validate_params(const GammaParams& params) {
  if (!(params.shape > 0.0) || !std::isfinite(params.shape) ||
      !(params.rate > 0.0) || !std::isfinite(params.rate)) {
    throw DomainError("gamma: shape and rate must be positive and finite");
  }
}

void validate_params(const BetaParams& params) {
  if (!(params.a > 0.0) || !std::isfinite(params.a) || !(params.b > 0.0) ||
      !std::isfinite(params.b)) {
    throw DomainError("beta: a and b must be positive and finite");
  }
}

void validate_params(const BernoulliParams& params) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw DomainError("bernoulli: p must lie in [0, 1]");
  }
}

void validate_params(const NormalGammaParams& params) {
  if (!std::isfinite(params.mu0) || !(params.kappa0 >= 0.0) ||
      !std::isfinite(params.kappa0) || !(params.alpha0 > 0.0) ||
      !std::isfinite(params.alpha0) || !(params.beta0 >= 0.0) ||
      !std::isfinite(params.beta0)) {
    throw DomainError(
        "normal-gamma: requires finite mu0, kappa0 >= 0, alpha0 > 0, "
        "beta0 >= 0");
  }
}

double sample(const GaussianParams& dist, RngStream& rng) {
  validate_params(dist);
  if (dist.variance == 0.0) return dist.mean;
  return require_finite(
      dist.mean + std::sqrt(dist.variance) * standard_normal(rng), "gaussian");
}

double sample(const GammaParams& dist, RngStream& rng) {
  validate_params(dist);
  return require_finite(standard_gamma(dist.shape, rng) / dist.rate, "gamma");
}

double sample(const BetaParams& dist, RngStream& rng) {
  validate_params(dist);
  const double x = standard_gamma(dist.a, rng);
  const double y = standard_gamma(dist.b, rng);
  const double total = x + y;
  if (!(total > 0.0)) throw DomainError("beta: gamma draws underflowed");
  return require_finite(x / total, "beta");
}

double sample(const BernoulliParams& dist, RngStream& rng) {
  validate_params(dist);
  return rng.next_unit() < dist.p ? 1.0 : 0.0;
}

std::pair<double, double> sample_normal_gamma(const NormalGammaParams& prior,
                                              RngStream& rng) {
  validate_params(prior);
  if (prior.kappa0 == 0.0 || prior.beta0 == 0.0) {
    throw DegeneratePriorError(
        "sample_normal_gamma: kappa0 and beta0 must be positive");
  }
  const double lambda = sample(GammaParams{prior.alpha0, prior.beta0}, rng);
  if (!(lambda > 0.0)) {
    throw DomainError("sample_normal_gamma: precision draw underflowed");
  }
  const double mu =
      sample(GaussianParams{prior.mu0, 1.0 / (prior.kappa0 * lambda)}, rng);
  return {mu, lambda};
}

double inverse_gamma_mean(double alpha, double beta) {
  if (!std::isfinite(alpha) || !(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("inverse_gamma_mean: beta must be positive and finite");
  }
  if (alpha <= 1.0) {
    throw UndefinedMomentError(
        "inverse_gamma_mean: moment undefined for alpha <= 1");
  }
  return beta / (alpha - 1.0);
}

}  // namespace banditlab

#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace banditlab {

struct GaussianParams {
  double mean = 0.0;
  double variance = 1.0;
};

struct GammaParams {
  double shape = 1.0;
  double rate = 1.0;
};

struct BetaParams {
  double a = 1.0;
  double b = 1.0;
};

struct BernoulliParams {
  double p = 0.5;
};

// Conjugate prior for a Gaussian with unknown mean and precision:
// lambda ~ Gamma(alpha0, beta0), mu | lambda ~ N(mu0, 1/(kappa0 * lambda)).
struct NormalGammaParams {
  double mu0 = 0.0;
  double kappa0 = 1.0;
  double alpha0 = 1.0;
  double beta0 = 1.0;
};

// Deterministic splittable random stream. A stream's identity is
// (root_seed, path); generator state is a pure function of that identity, so
// equal identities replay equal sample sequences regardless of process,
// thread schedule, or how much the parent stream has already been consumed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t root_seed);

  // Child stream keyed by (this stream's identity, index). Does not consume
  // or depend on this stream's position.
  RngStream derive(std::uint64_t index) const;

  std::uint64_t root_seed() const noexcept { return root_seed_; }
  const std::vector<std::uint64_t>& path() const noexcept { return path_; }

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53-bit resolution.
  double next_unit();
  // Uniform on (0, 1]; safe to pass to log().
  double next_unit_open();
  // Uniform integer on [0, n); unbiased via rejection.
  std::uint64_t next_below(std::uint64_t n);

 private:
  RngStream(std::uint64_t root_seed, std::vector<std::uint64_t> path,
            std::uint64_t key);

  std::uint64_t root_seed_ = 0;
  std::vector<std::uint64_t> path_;
  std::uint64_t key_ = 0;
  std::array<std::uint64_t, 4> state_{};
};

// Free-function form of RngStream::derive.
RngStream derive_stream(const RngStream& parent, std::uint64_t index);

void validate_params(const GaussianParams& params);
void validate_params(const GammaParams& params);
void validate_params(const BetaParams& params);
void validate_params(const BernoulliParams& params);
void validate_params(const NormalGammaParams& params);

// Every sampler validates its parameters, never returns NaN or infinity, and
// draws nothing from `rng` when the distribution is a point mass.
double sample(const GaussianParams& dist, RngStream& rng);
double sample(const GammaParams& dist, RngStream& rng);
double sample(const BetaParams& dist, RngStream& rng);
// Returns 0.0 or 1.0.
double sample(const BernoulliParams& dist, RngStream& rng);

// Joint draw (mu, lambda). Requires a proper prior: kappa0 > 0 and beta0 > 0.
std::pair<double, double> sample_normal_gamma(const NormalGammaParams& prior,
                                              RngStream& rng);

// E[1/X] for X ~ Gamma(alpha, beta) = beta / (alpha - 1); needs alpha > 1.
double inverse_gamma_mean(double alpha, double beta);

}  // namespace banditlab

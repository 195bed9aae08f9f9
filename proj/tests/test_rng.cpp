#include <doctest.h>

#include <cmath>
#include <vector>

#include "banditlab/errors.hpp"
#include "banditlab/rng.hpp"
#include "stat_helpers.hpp"

using namespace banditlab;

TEST_CASE("derived streams are deterministic and distinct") {
  const RngStream root(12345);
  RngStream a = root.derive(3);
  RngStream b = root.derive(3);
  for (int i = 0; i < 10; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }

  RngStream c = root.derive(0);
  RngStream d = root.derive(1);
  bool all_equal = true;
  for (int i = 0; i < 10; ++i) {
    if (c.next_u64() != d.next_u64()) all_equal = false;
  }
  CHECK_FALSE(all_equal);
  CHECK(derive_stream(root, 7).next_u64() == root.derive(7).next_u64());
}

TEST_CASE("stream identity is (root_seed, path), independent of consumption") {
  RngStream parent(99);
  const RngStream child_before = parent.derive(4);
  for (int i = 0; i < 100; ++i) parent.next_u64();
  const RngStream child_after = parent.derive(4);
  RngStream x = child_before;
  RngStream y = child_after;
  for (int i = 0; i < 10; ++i) {
    CHECK(x.next_u64() == y.next_u64());
  }

  RngStream rebuilt = RngStream(99).derive(4).derive(2);
  RngStream original = RngStream(99).derive(4).derive(2);
  CHECK(rebuilt.next_u64() == original.next_u64());
  CHECK(RngStream(99).root_seed() == 99);
  CHECK(RngStream(99).derive(4).derive(2).path() ==
        std::vector<std::uint64_t>{4, 2});

  RngStream other_seed = RngStream(100).derive(4).derive(2);
  CHECK(RngStream(99).derive(4).derive(2).next_u64() != other_seed.next_u64());
}

TEST_CASE("uniform ranges") {
  RngStream rng(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = rng.next_unit_open();
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }
  CHECK(rng.next_below(1) == 0);
  for (int i = 0; i < 1000; ++i) {
    CHECK(rng.next_below(13) < 13);
  }
  CHECK_THROWS_AS(rng.next_below(0), DomainError);
}

TEST_CASE("degenerate gaussian returns the mean exactly without consuming") {
  RngStream rng(1);
  RngStream twin(1);
  CHECK(sample(GaussianParams{5.0, 0.0}, rng) == 5.0);
  CHECK(rng.next_u64() == twin.next_u64());
}

TEST_CASE("bernoulli endpoints and domain") {
  RngStream rng(2);
  for (int i = 0; i < 50; ++i) {
    CHECK(sample(BernoulliParams{1.0}, rng) == 1.0);
    CHECK(sample(BernoulliParams{0.0}, rng) == 0.0);
    const double draw = sample(BernoulliParams{0.4}, rng);
    CHECK((draw == 0.0 || draw == 1.0));
  }
  CHECK_THROWS_AS(sample(BernoulliParams{-0.1}, rng), DomainError);
  CHECK_THROWS_AS(sample(BernoulliParams{1.1}, rng), DomainError);
}

TEST_CASE("parameter validation rejects out-of-domain inputs") {
  RngStream rng(3);
  CHECK_THROWS_AS(sample(GaussianParams{0.0, -1.0}, rng), DomainError);
  CHECK_THROWS_AS(sample(GaussianParams{std::nan(""), 1.0}, rng), DomainError);
  CHECK_THROWS_AS(sample(GammaParams{0.0, 1.0}, rng), DomainError);
  CHECK_THROWS_AS(sample(GammaParams{1.0, 0.0}, rng), DomainError);
  CHECK_THROWS_AS(sample(BetaParams{0.0, 1.0}, rng), DomainError);
  CHECK_THROWS_AS(sample(BetaParams{1.0, -2.0}, rng), DomainError);
}

TEST_CASE("gamma moments match alpha/beta and alpha/beta^2") {
  RngStream rng(42);
  const auto check_gamma = [&](double shape, double rate) {
    const int batches = 40;
    const int per_batch = 5000;
    std::vector<double> batch_means;
    std::vector<double> batch_vars;
    for (int b = 0; b < batches; ++b) {
      std::vector<double> draws;
      draws.reserve(per_batch);
      for (int i = 0; i < per_batch; ++i) {
        draws.push_back(sample(GammaParams{shape, rate}, rng));
      }
      const testutil::MeanVar mv = testutil::mean_var(draws);
      batch_means.push_back(mv.mean);
      batch_vars.push_back(mv.variance);
    }
    const testutil::MeanVar mean_est = testutil::mean_var(batch_means);
    const testutil::MeanVar var_est = testutil::mean_var(batch_vars);
    CHECK(std::fabs(mean_est.mean - shape / rate) <=
          5.0 * mean_est.stderr_of_mean());
    CHECK(std::fabs(var_est.mean - shape / (rate * rate)) <=
          5.0 * var_est.stderr_of_mean());
  };
  check_gamma(3.0, 2.0);
  check_gamma(0.5, 1.0);  // exercises the shape < 1 boost
  check_gamma(4.0, 1.0);
}

TEST_CASE("beta moments match a/(a+b)") {
  RngStream rng(43);
  const int n = 100000;
  std::vector<double> draws;
  draws.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = sample(BetaParams{2.0, 3.0}, rng);
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
    draws.push_back(x);
  }
  const testutil::MeanVar mv = testutil::mean_var(draws);
  CHECK(std::fabs(mv.mean - 0.4) <= 5.0 * mv.stderr_of_mean());
}

TEST_CASE("normalized squared deviations of gaussian draws average to n-1") {
  RngStream rng(44);
  const int n = 5;
  const double sigma2 = 2.0;
  const int replications = 20000;
  std::vector<double> stats;
  stats.reserve(replications);
  for (int r = 0; r < replications; ++r) {
    double draws[n];
    double mean = 0.0;
    for (int i = 0; i < n; ++i) {
      draws[i] = sample(GaussianParams{1.0, sigma2}, rng);
      mean += draws[i];
    }
    mean /= n;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = draws[i] - mean;
      ss += d * d;
    }
    stats.push_back(ss / sigma2);
  }
  const testutil::MeanVar mv = testutil::mean_var(stats);
  CHECK(std::fabs(mv.mean - (n - 1)) <= 5.0 * mv.stderr_of_mean());
}

TEST_CASE("normal-gamma sampling matches its moment identities") {
  RngStream rng(45);
  const NormalGammaParams prior{0.0, 2.0, 3.0, 1.0};
  const int batches = 40;
  const int per_batch = 5000;
  std::vector<double> mu_means;
  std::vector<double> mu_vars;
  std::vector<double> inv_lambda_means;
  for (int b = 0; b < batches; ++b) {
    std::vector<double> mus;
    std::vector<double> inv_lambdas;
    mus.reserve(per_batch);
    inv_lambdas.reserve(per_batch);
    for (int i = 0; i < per_batch; ++i) {
      const auto [mu, lambda] = sample_normal_gamma(prior, rng);
      mus.push_back(mu);
      inv_lambdas.push_back(1.0 / lambda);
    }
    const testutil::MeanVar mv = testutil::mean_var(mus);
    mu_means.push_back(mv.mean);
    mu_vars.push_back(mv.variance);
    inv_lambda_means.push_back(testutil::mean_var(inv_lambdas).mean);
  }
  const testutil::MeanVar mean_est = testutil::mean_var(mu_means);
  const testutil::MeanVar var_est = testutil::mean_var(mu_vars);
  const testutil::MeanVar inv_est = testutil::mean_var(inv_lambda_means);
  // E[mu] = mu0
  CHECK(std::fabs(mean_est.mean - prior.mu0) <=
        5.0 * mean_est.stderr_of_mean());
  // Var(mu) = beta0 / (kappa0 (alpha0 - 1))
  const double var_mu =
      prior.beta0 / (prior.kappa0 * (prior.alpha0 - 1.0));
  CHECK(std::fabs(var_est.mean - var_mu) <= 5.0 * var_est.stderr_of_mean());
  // E[1/lambda] = beta0 / (alpha0 - 1)
  CHECK(std::fabs(inv_est.mean -
                  inverse_gamma_mean(prior.alpha0, prior.beta0)) <=
        5.0 * inv_est.stderr_of_mean());
}

TEST_CASE("huge kappa0 concentrates the sampled mean at mu0") {
  RngStream rng(46);
  const NormalGammaParams prior{0.25, 1e12, 4.0, 1.0};
  for (int i = 0; i < 100; ++i) {
    const auto [mu, lambda] = sample_normal_gamma(prior, rng);
    CHECK(std::fabs(mu - 0.25) < 1e-4);
    CHECK(lambda > 0.0);
  }
}

TEST_CASE("degenerate normal-gamma priors are rejected") {
  RngStream rng(47);
  CHECK_THROWS_AS(sample_normal_gamma({0.0, 0.0, 0.5, 0.5}, rng),
                  DegeneratePriorError);
  CHECK_THROWS_AS(sample_normal_gamma({0.0, 1.0, 0.5, 0.0}, rng),
                  DegeneratePriorError);
  CHECK_THROWS_AS(sample_normal_gamma({0.0, -1.0, 0.5, 1.0}, rng),
                  DomainError);
  CHECK_THROWS_AS(sample_normal_gamma({0.0, 1.0, 0.0, 1.0}, rng), DomainError);
}

TEST_CASE("inverse gamma mean formula and domain") {
  CHECK(inverse_gamma_mean(2.0, 3.0) == 3.0);
  CHECK(inverse_gamma_mean(1.5, 1.0) == 2.0);
  CHECK_THROWS_AS(inverse_gamma_mean(1.0, 1.0), UndefinedMomentError);
  CHECK_THROWS_AS(inverse_gamma_mean(0.5, 1.0), UndefinedMomentError);
  CHECK_THROWS_AS(inverse_gamma_mean(2.0, 0.0), DomainError);
  CHECK_THROWS_AS(inverse_gamma_mean(2.0, -1.0), DomainError);
}

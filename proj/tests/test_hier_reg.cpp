#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

#include "banditlab/errors.hpp"
#include "banditlab/hier_reg.hpp"
#include "banditlab/rng.hpp"

using namespace banditlab;

namespace {

Eigen::VectorXd random_vector(Eigen::Index n, RngStream& rng) {
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v[i] = sample(GaussianParams{0.0, 1.0}, rng);
  }
  return v;
}

Eigen::MatrixXd random_matrix(Eigen::Index rows, Eigen::Index cols,
                              RngStream& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = sample(GaussianParams{0.0, 1.0}, rng);
    }
  }
  return m;
}

Eigen::MatrixXd random_spd(Eigen::Index k, RngStream& rng) {
  const Eigen::MatrixXd a = random_matrix(k, k, rng);
  return a.transpose() * a / static_cast<double>(k) +
         0.1 * Eigen::MatrixXd::Identity(k, k);
}

std::vector<TaskData> random_tasks(Eigen::Index k, int t, int max_rows,
                                   RngStream& rng) {
  std::vector<TaskData> tasks;
  for (int i = 0; i < t; ++i) {
    const Eigen::Index n =
        1 + static_cast<Eigen::Index>(rng.next_below(
                static_cast<std::uint64_t>(max_rows)));
    TaskData task;
    task.x = random_matrix(n, k, rng);
    task.y = random_vector(n, rng);
    tasks.push_back(std::move(task));
  }
  return tasks;
}

double rel_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const double scale =
      std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

TEST_CASE("zero tasks return the prior unchanged") {
  HierPrior prior;
  prior.mu0 = Eigen::Vector3d(0.1, -0.2, 0.3);
  prior.lambda0 = Eigen::Matrix3d::Identity() * 2.0;
  const Eigen::MatrixXd sigma = Eigen::Matrix3d::Identity() * 0.5;

  const HierPosterior d = posterior_direct(prior, sigma, 1.0, {});
  CHECK((d.mu.array() == prior.mu0.array()).all());
  CHECK((d.lambda.array() == prior.lambda0.array()).all());

  const HierPosterior w = posterior_woodbury(prior, sigma, 1.0, {});
  CHECK((w.mu.array() == prior.mu0.array()).all());
  CHECK((w.lambda.array() == prior.lambda0.array()).all());
}

TEST_CASE("scalar single-observation case has a hand-checkable posterior") {
  HierPrior prior;
  prior.mu0 = Eigen::VectorXd::Zero(1);
  prior.lambda0 = Eigen::MatrixXd::Identity(1, 1);
  const Eigen::MatrixXd sigma = Eigen::MatrixXd::Identity(1, 1);
  TaskData task;
  task.x = Eigen::MatrixXd::Constant(1, 1, 1.0);
  task.y = Eigen::VectorXd::Constant(1, 2.0);
  const std::vector<TaskData> tasks{task};

  for (const HierPosterior& p : {posterior_direct(prior, sigma, 1.0, tasks),
                                 posterior_woodbury(prior, sigma, 1.0, tasks)}) {
    CHECK(p.lambda(0, 0) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(p.mu(0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("direct and woodbury forms agree on random instances") {
  RngStream rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng.next_below(8));
    const int t = static_cast<int>(rng.next_below(11));
    HierPrior prior{random_vector(k, rng), random_spd(k, rng)};
    const Eigen::MatrixXd sigma = random_spd(k, rng);
    const std::vector<TaskData> tasks = random_tasks(k, t, 64, rng);

    const HierPosterior d = posterior_direct(prior, sigma, 0.7, tasks);
    const HierPosterior w = posterior_woodbury(prior, sigma, 0.7, tasks);
    CHECK(rel_diff(d.lambda, w.lambda) < 1e-8);
    CHECK(rel_diff(d.mu, w.mu) < 1e-8);
  }
}

TEST_CASE("a vanishing task-level covariance reduces to ridge regression") {
  RngStream rng(62);
  const Eigen::Index k = 4;
  HierPrior prior{random_vector(k, rng), random_spd(k, rng)};
  const Eigen::MatrixXd sigma = 1e-12 * Eigen::MatrixXd::Identity(k, k);
  const double sigma2 = 0.8;
  const std::vector<TaskData> tasks = random_tasks(k, 4, 16, rng);

  Eigen::MatrixXd ridge_lambda = prior.lambda0;
  Eigen::VectorXd ridge_info = prior.lambda0 * prior.mu0;
  for (const TaskData& task : tasks) {
    ridge_lambda += task.x.transpose() * task.x / sigma2;
    ridge_info += task.x.transpose() * task.y / sigma2;
  }
  const Eigen::VectorXd ridge_mu = ridge_lambda.llt().solve(ridge_info);

  const HierPosterior d = posterior_direct(prior, sigma, sigma2, tasks);
  CHECK(rel_diff(d.lambda, ridge_lambda) < 1e-6);
  CHECK(rel_diff(d.mu, ridge_mu) < 1e-6);

  const HierPosterior w = posterior_woodbury(prior, sigma, sigma2, tasks);
  CHECK(rel_diff(w.lambda, ridge_lambda) < 1e-6);
  CHECK(rel_diff(w.mu, ridge_mu) < 1e-6);
}

TEST_CASE("the accumulated posterior does not depend on task order") {
  RngStream rng(63);
  const Eigen::Index k = 3;
  HierPrior prior{random_vector(k, rng), random_spd(k, rng)};
  const Eigen::MatrixXd sigma = random_spd(k, rng);
  std::vector<TaskData> tasks = random_tasks(k, 6, 12, rng);

  const HierPosterior forward = posterior_direct(prior, sigma, 1.1, tasks);
  std::vector<TaskData> reversed(tasks.rbegin(), tasks.rend());
  const HierPosterior backward = posterior_direct(prior, sigma, 1.1, reversed);
  CHECK(rel_diff(forward.lambda, backward.lambda) < 1e-8);
  CHECK(rel_diff(forward.mu, backward.mu) < 1e-8);

  const HierPosterior w_forward = posterior_woodbury(prior, sigma, 1.1, tasks);
  const HierPosterior w_backward =
      posterior_woodbury(prior, sigma, 1.1, reversed);
  CHECK(rel_diff(w_forward.lambda, w_backward.lambda) < 1e-8);
  CHECK(rel_diff(w_forward.mu, w_backward.mu) < 1e-8);
}

TEST_CASE("information grows and covariance shrinks with more tasks") {
  RngStream rng(64);
  const Eigen::Index k = 4;
  HierPrior prior{random_vector(k, rng), random_spd(k, rng)};
  const Eigen::MatrixXd sigma = random_spd(k, rng);
  const std::vector<TaskData> tasks = random_tasks(k, 8, 10, rng);

  double prev_trace = prior.lambda0.inverse().trace();
  for (std::size_t t = 0; t <= tasks.size(); ++t) {
    const std::span<const TaskData> prefix(tasks.data(), t);
    const HierPosterior p = posterior_direct(prior, sigma, 1.0, prefix);
    const Eigen::MatrixXd gain = p.lambda - prior.lambda0;
    const Eigen::VectorXd eigenvalues =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gain).eigenvalues();
    CHECK(eigenvalues.minCoeff() >= -1e-8);
    const double trace = p.lambda.inverse().trace();
    CHECK(trace <= prev_trace + 1e-10);
    prev_trace = trace;
  }
}

TEST_CASE("singular task-level covariance") {
  HierPrior prior;
  prior.mu0 = Eigen::Vector2d(0.0, 0.0);
  prior.lambda0 = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d singular;
  singular << 1.0, 0.0, 0.0, 0.0;
  TaskData task;
  task.x = Eigen::MatrixXd::Identity(2, 2);
  task.y = Eigen::Vector2d(1.0, 2.0);
  const std::vector<TaskData> tasks{task};

  CHECK_THROWS_AS(posterior_woodbury(prior, singular, 1.0, tasks),
                  ConditioningError);
  // the direct recurrence only factorizes sigma2 I + X Sigma X^T, which a
  // positive sigma2 keeps positive definite
  const HierPosterior d = posterior_direct(prior, singular, 1.0, tasks);
  CHECK(std::isfinite(d.mu.norm()));
  CHECK(std::isfinite(d.lambda.norm()));
}

TEST_CASE("input validation") {
  HierPrior prior;
  prior.mu0 = Eigen::Vector2d(0.0, 0.0);
  prior.lambda0 = Eigen::Matrix2d::Identity();
  const Eigen::MatrixXd sigma = Eigen::Matrix2d::Identity();
  TaskData good;
  good.x = Eigen::MatrixXd::Identity(2, 2);
  good.y = Eigen::Vector2d(1.0, 2.0);

  SUBCASE("empty prior") {
    HierPrior bad;
    bad.mu0 = Eigen::VectorXd();
    bad.lambda0 = Eigen::MatrixXd();
    CHECK_THROWS_AS(posterior_direct(bad, sigma, 1.0, {}), DomainError);
  }
  SUBCASE("precision shape") {
    HierPrior bad = prior;
    bad.lambda0 = Eigen::MatrixXd::Identity(3, 3);
    CHECK_THROWS_AS(posterior_direct(bad, sigma, 1.0, {}), DomainError);
  }
  SUBCASE("sigma shape") {
    CHECK_THROWS_AS(
        posterior_direct(prior, Eigen::MatrixXd::Identity(3, 3), 1.0, {}),
        DomainError);
  }
  SUBCASE("asymmetric matrices") {
    Eigen::Matrix2d skew;
    skew << 1.0, 0.5, -0.5, 1.0;
    CHECK_THROWS_AS(posterior_direct(prior, skew, 1.0, {}), DomainError);
    HierPrior bad = prior;
    bad.lambda0 = skew;
    CHECK_THROWS_AS(posterior_direct(bad, sigma, 1.0, {}), DomainError);
  }
  SUBCASE("noise variance") {
    CHECK_THROWS_AS(posterior_direct(prior, sigma, 0.0, {}), DomainError);
    CHECK_THROWS_AS(posterior_direct(prior, sigma, -1.0, {}), DomainError);
  }
  SUBCASE("task shapes") {
    TaskData empty;
    empty.x = Eigen::MatrixXd(0, 2);
    empty.y = Eigen::VectorXd();
    const std::vector<TaskData> with_empty{empty};
    CHECK_THROWS_AS(posterior_direct(prior, sigma, 1.0, with_empty),
                    DataError);

    TaskData narrow;
    narrow.x = Eigen::MatrixXd::Identity(3, 3);
    narrow.y = Eigen::Vector3d(1.0, 2.0, 3.0);
    const std::vector<TaskData> with_narrow{narrow};
    CHECK_THROWS_AS(posterior_direct(prior, sigma, 1.0, with_narrow),
                    DomainError);

    TaskData ragged = good;
    ragged.y = Eigen::Vector3d(1.0, 2.0, 3.0);
    const std::vector<TaskData> with_ragged{ragged};
    CHECK_THROWS_AS(posterior_woodbury(prior, sigma, 1.0, with_ragged),
                    DomainError);
  }
}

#include "banditlab/hier_reg.hpp"

#include <cmath>
#include <string>

#include "banditlab/errors.hpp"

namespace banditlab {
namespace {

void check_symmetric(const Eigen::MatrixXd& m, const char* what) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError(std::string(what) + " must be symmetric");
  }
}

void validate_inputs(const HierPrior& prior, const Eigen::MatrixXd& sigma,
                     double sigma2, std::span<const TaskData> tasks) {
  const Eigen::Index k = prior.mu0.size();
  if (k < 1) throw DomainError("hier posterior: mu0 must be non-empty");
  if (prior.lambda0.rows() != k || prior.lambda0.cols() != k) {
    throw DomainError("hier posterior: Lambda0 must be K x K");
  }
  if (sigma.rows() != k || sigma.cols() != k) {
    throw DomainError("hier posterior: Sigma must be K x K");
  }
  check_symmetric(prior.lambda0, "hier posterior: Lambda0");
  check_symmetric(sigma, "hier posterior: Sigma");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw DomainError("hier posterior: sigma2 must be positive");
  }
  for (const TaskData& task : tasks) {
    if (task.x.rows() < 1) {
      throw DataError("hier posterior: task needs at least one row");
    }
    if (task.x.cols() != k) {
      throw DomainError("hier posterior: task X must have K columns");
    }
    if (task.y.size() != task.x.rows()) {
      throw DomainError("hier posterior: task X rows and y length differ");
    }
  }
}

Eigen::LLT<Eigen::MatrixXd> factorize(const Eigen::MatrixXd& m,
                                      const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw ConditioningError(std::string(what) +
                            " is not numerically positive definite");
  }
  return llt;
}

}  // namespace

HierPosterior posterior_direct(const HierPrior& prior,
                               const Eigen::MatrixXd& sigma, double sigma2,
                               std::span<const TaskData> tasks) {
  validate_inputs(prior, sigma, sigma2, tasks);
  Eigen::MatrixXd lambda = prior.lambda0;
  Eigen::VectorXd mu = prior.mu0;
  for (const TaskData& task : tasks) {
    const Eigen::Index n = task.x.rows();
    const Eigen::MatrixXd marginal =
        sigma2 * Eigen::MatrixXd::Identity(n, n) +
        task.x * sigma * task.x.transpose();
    const auto llt = factorize(marginal, "posterior_direct: sigma2 I + X Sigma X^T");
    const Eigen::VectorXd rhs =
        lambda * mu + task.x.transpose() * llt.solve(task.y);
    lambda += task.x.transpose() * llt.solve(task.x);
    mu = factorize(lambda, "posterior_direct: posterior precision")
             .solve(rhs);
  }
  return {std::move(mu), std::move(lambda)};
}

HierPosterior posterior_woodbury(const HierPrior& prior,
                                 const Eigen::MatrixXd& sigma, double sigma2,
                                 std::span<const TaskData> tasks) {
  validate_inputs(prior, sigma, sigma2, tasks);
  const Eigen::Index k = prior.mu0.size();
  const Eigen::MatrixXd sigma_inv =
      factorize(sigma, "posterior_woodbury: Sigma")
          .solve(Eigen::MatrixXd::Identity(k, k));
  if (tasks.empty()) return {prior.mu0, prior.lambda0};

  Eigen::MatrixXd lambda = prior.lambda0;
  Eigen::VectorXd info = prior.lambda0 * prior.mu0;
  for (const TaskData& task : tasks) {
    const Eigen::MatrixXd s_scaled = task.x.transpose() * task.x / sigma2;
    const Eigen::VectorXd c_scaled = task.x.transpose() * task.y / sigma2;
    const auto llt =
        factorize(sigma_inv + s_scaled, "posterior_woodbury: Sigma^-1 + S/sigma2");
    lambda += s_scaled - s_scaled * llt.solve(s_scaled);
    info += c_scaled - s_scaled * llt.solve(c_scaled);
  }
  Eigen::VectorXd mu =
      factorize(lambda, "posterior_woodbury: posterior precision").solve(info);
  return {std::move(mu), std::move(lambda)};
}

}  // namespace banditlab

#pragma once

#include <Eigen/Dense>
#include <span>

namespace banditlab {

// Three-level Gaussian multi-task regression:
//   theta0 ~ N(mu0, Lambda0^-1)
//   theta_t | theta0 ~ N(theta0, Sigma)       (one per task)
//   y_t | theta_t ~ N(X_t theta_t, sigma2 I)
// Both evaluators return the exact posterior of theta0 given all tasks.

struct HierPrior {
  Eigen::VectorXd mu0;
  Eigen::MatrixXd lambda0;  // symmetric positive definite precision
};

struct TaskData {
  Eigen::MatrixXd x;  // N x K feature rows
  Eigen::VectorXd y;  // N observations
};

struct HierPosterior {
  Eigen::VectorXd mu;
  Eigen::MatrixXd lambda;
};

// Task-by-task recurrence through the N x N marginal covariance
// sigma2 I + X Sigma X^T; cost O(T N^3). Works for singular Sigma.
HierPosterior posterior_direct(const HierPrior& prior,
                               const Eigen::MatrixXd& sigma, double sigma2,
                               std::span<const TaskData> tasks);

// Same posterior through K x K operations on S_t = X^T X and c_t = X^T y;
// cost O(T K^3). Requires Sigma invertible.
HierPosterior posterior_woodbury(const HierPrior& prior,
                                 const Eigen::MatrixXd& sigma, double sigma2,
                                 std::span<const TaskData> tasks);

}  // namespace banditlab

#include "msgain/uncertainty.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>
#include <utility>

namespace msgain {

UncertaintyCovariance::UncertaintyCovariance(Eigen::MatrixXd pi)
    : pi_(std::move(pi)) {
  if (pi_.rows() == 0 || pi_.rows() != pi_.cols()) {
    throw std::invalid_argument("covariance must be square and nonempty");
  }
  const double scale = pi_.cwiseAbs().maxCoeff();
  if ((pi_ - pi_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + scale)) {
    throw std::invalid_argument("covariance must be symmetric");
  }
  pi_ = ((pi_ + pi_.transpose()) / 2.0).eval();

  if (pi_.diagonal().minCoeff() < 0.0) {
    throw std::invalid_argument("covariance diagonal must be nonnegative");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(pi_,
                                                    Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-12 * pi_.trace()) {
    throw std::invalid_argument("covariance must be positive semi-definite");
  }
}

UncertaintyCovariance UncertaintyCovariance::two_channel(double s1sq,
                                                         double s2sq,
                                                         double s12) {
  Eigen::MatrixXd pi(2, 2);
  pi << s1sq, s12, s12, s2sq;
  return UncertaintyCovariance(pi);
}

UncertaintyCovariance UncertaintyCovariance::zero(int dim) {
  return UncertaintyCovariance(Eigen::MatrixXd::Zero(dim, dim));
}

double UncertaintyCovariance::s1sq() const {
  if (dim() != 2) throw std::logic_error("two-channel accessor on dim != 2");
  return pi_(0, 0);
}

double UncertaintyCovariance::s2sq() const {
  if (dim() != 2) throw std::logic_error("two-channel accessor on dim != 2");
  return pi_(1, 1);
}

double UncertaintyCovariance::s12() const {
  if (dim() != 2) throw std::logic_error("two-channel accessor on dim != 2");
  return pi_(0, 1);
}

UncertaintyCovariance UncertaintyCovariance::scaled(double factor) const {
  if (factor < 0.0) {
    throw std::invalid_argument("covariance scale must be nonnegative");
  }
  return UncertaintyCovariance(pi_ * factor);
}

}  // namespace msgain

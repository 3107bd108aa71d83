// Second-moment bounds for diagonally structured stochastic uncertainty.
#pragma once

#include <Eigen/Core>

namespace msgain {

/// Symmetric PSD matrix of channel second moments. For two channels the
/// entries are the variances (s1sq, s2sq) and the correlation s12.
class UncertaintyCovariance {
 public:
  explicit UncertaintyCovariance(Eigen::MatrixXd pi);

  static UncertaintyCovariance two_channel(double s1sq, double s2sq,
                                           double s12);
  static UncertaintyCovariance zero(int dim);

  const Eigen::MatrixXd& matrix() const { return pi_; }
  int dim() const { return static_cast<int>(pi_.rows()); }

  // Two-channel accessors; throw unless dim() == 2.
  double s1sq() const;
  double s2sq() const;
  double s12() const;

  UncertaintyCovariance scaled(double factor) const;

 private:
  Eigen::MatrixXd pi_;
};

}  // namespace msgain

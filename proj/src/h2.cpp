#include "msgain/h2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "msgain/state_space.hpp"

namespace msgain {

double h2_norm_sq(const TransferFunction& tf, H2Method method,
                  int grid_points) {
  if (tf.is_zero()) return 0.0;
  if (!is_schur_stable(tf)) {
    throw std::invalid_argument("H2 undefined for unstable system");
  }

  if (method == H2Method::lyapunov) {
    const StateSpaceRealization ss = to_state_space(tf.normalized());
    if (ss.states() == 0) return ss.D(0, 0) * ss.D(0, 0);
    const Eigen::MatrixXd gramian = dlyap(ss.A, ss.B * ss.B.transpose());
    return (ss.C * gramian * ss.C.transpose())(0, 0) + ss.D(0, 0) * ss.D(0, 0);
  }

  if (grid_points < 2) {
    throw std::invalid_argument("quadrature needs at least 2 grid points");
  }
  double acc = 0.0;
  for (int k = 0; k < grid_points; ++k) {
    const double omega =
        -std::numbers::pi + 2.0 * std::numbers::pi * k / grid_points;
    acc += std::norm(tf.evaluate(omega));
  }
  return acc / grid_points;
}

}  // namespace msgain

// State-space realizations and the discrete Lyapunov solver.
#pragma once

#include <Eigen/Core>

#include "msgain/transfer_function.hpp"

namespace msgain {

/// x(k+1) = A x(k) + B u(k), y(k) = C x(k) + D u(k).
struct StateSpaceRealization {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::MatrixXd C;
  Eigen::MatrixXd D;

  StateSpaceRealization(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::MatrixXd c,
                        Eigen::MatrixXd d);

  int states() const { return static_cast<int>(A.rows()); }
  int inputs() const { return static_cast<int>(B.cols()); }
  int outputs() const { return static_cast<int>(C.rows()); }

  Eigen::MatrixXcd frequency_response(double omega) const;
};

/// Controllable canonical form. Constant systems get an empty state.
StateSpaceRealization to_state_space(const TransferFunction& tf);

/// Block-diagonal aggregation of per-entry canonical realizations.
StateSpaceRealization to_state_space(const TransferMatrix& tm);

/// Solves A X A^T - X + Q = 0 for symmetric PSD Q; requires rho(A) < 1.
Eigen::MatrixXd dlyap(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q);

/// Kronecker product, column-major vec convention.
Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace msgain

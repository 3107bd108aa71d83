#include "msgain/state_space.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>

namespace msgain {

StateSpaceRealization::StateSpaceRealization(Eigen::MatrixXd a,
                                             Eigen::MatrixXd b,
                                             Eigen::MatrixXd c,
                                             Eigen::MatrixXd d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
  if (A.rows() != A.cols() || B.rows() != A.rows() || C.cols() != A.cols() ||
      D.rows() != C.rows() || D.cols() != B.cols()) {
    throw std::invalid_argument("inconsistent state-space dimensions");
  }
}

Eigen::MatrixXcd StateSpaceRealization::frequency_response(double omega) const {
  const std::complex<double> z = std::polar(1.0, omega);
  if (states() == 0) return D.cast<std::complex<double>>();
  Eigen::MatrixXcd zi =
      z * Eigen::MatrixXcd::Identity(states(), states()) -
      A.cast<std::complex<double>>();
  return C.cast<std::complex<double>>() *
             zi.partialPivLu().solve(B.cast<std::complex<double>>()) +
         D.cast<std::complex<double>>();
}

StateSpaceRealization to_state_space(const TransferFunction& tf) {
  const int n = tf.den().degree();
  const double den_lead = tf.den().leading();

  // Monic denominator and matching numerator scale.
  std::vector<double> a(static_cast<std::size_t>(n), 0.0);
  for (int k = 1; k <= n; ++k) {
    a[static_cast<std::size_t>(k - 1)] =
        tf.den().coeffs()[static_cast<std::size_t>(k)] / den_lead;
  }
  std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
  if (!tf.num().is_zero()) {
    const int m = tf.num().degree();
    for (int k = 0; k <= m; ++k) {
      b[static_cast<std::size_t>(n - m + k)] =
          tf.num().coeffs()[static_cast<std::size_t>(k)] / den_lead;
    }
  }

  const double feedthrough = b[0];
  if (n == 0) {
    return StateSpaceRealization(
        Eigen::MatrixXd(0, 0), Eigen::MatrixXd(0, 1), Eigen::MatrixXd(1, 0),
        Eigen::MatrixXd::Constant(1, 1, feedthrough));
  }

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) A(0, j) = -a[static_cast<std::size_t>(j)];
  if (n > 1) A.block(1, 0, n - 1, n - 1).setIdentity();

  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, 1);
  B(0, 0) = 1.0;

  // Strictly proper remainder after extracting the feedthrough.
  Eigen::MatrixXd C(1, n);
  for (int j = 0; j < n; ++j) {
    C(0, j) = b[static_cast<std::size_t>(j + 1)] -
              feedthrough * a[static_cast<std::size_t>(j)];
  }
  Eigen::MatrixXd D = Eigen::MatrixXd::Constant(1, 1, feedthrough);
  return StateSpaceRealization(std::move(A), std::move(B), std::move(C),
                               std::move(D));
}

StateSpaceRealization to_state_space(const TransferMatrix& tm) {
  const int m = tm.rows();
  const int p = tm.cols();
  std::vector<std::vector<StateSpaceRealization>> parts;
  int total_states = 0;
  for (int i = 0; i < m; ++i) {
    std::vector<StateSpaceRealization> row;
    for (int j = 0; j < p; ++j) {
      row.push_back(to_state_space(tm.entry(i, j)));
      total_states += row.back().states();
    }
    parts.push_back(std::move(row));
  }

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(total_states, total_states);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(total_states, p);
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(m, total_states);
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(m, p);
  int offset = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j) {
      const auto& ss = parts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const int n = ss.states();
      if (n > 0) {
        A.block(offset, offset, n, n) = ss.A;
        B.block(offset, j, n, 1) = ss.B;
        C.block(i, offset, 1, n) = ss.C;
      }
      D(i, j) = ss.D(0, 0);
      offset += n;
    }
  }
  return StateSpaceRealization(std::move(A), std::move(B), std::move(C),
                               std::move(D));
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXd dlyap(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q) {
  if (A.rows() != A.cols() || Q.rows() != Q.cols() || A.rows() != Q.rows()) {
    throw std::invalid_argument("dlyap expects square A and Q of equal size");
  }
  const Eigen::Index n = A.rows();
  if (n == 0) return Eigen::MatrixXd(0, 0);

  const Eigen::VectorXcd eigs = A.eigenvalues();
  if (eigs.cwiseAbs().maxCoeff() >= 1.0) {
    throw std::invalid_argument("Lyapunov equation unsolvable, unstable A");
  }

  // vec(A X A^T) = (A (x) A) vec(X); solve (I - A (x) A) vec(X) = vec(Q).
  const Eigen::MatrixXd lhs =
      Eigen::MatrixXd::Identity(n * n, n * n) - kron(A, A);
  const Eigen::VectorXd q = Eigen::Map<const Eigen::VectorXd>(Q.data(), n * n);
  Eigen::VectorXd x = lhs.partialPivLu().solve(q);
  Eigen::MatrixXd X = Eigen::Map<Eigen::MatrixXd>(x.data(), n, n);
  X = ((X + X.transpose()) / 2.0).eval();

  const double residual = (A * X * A.transpose() - X + Q).norm();
  if (residual > 1e-10 * (Q.norm() + X.norm() + 1e-300)) {
    throw std::runtime_error("Lyapunov solve residual out of tolerance");
  }
  return X;
}

}  // namespace msgain

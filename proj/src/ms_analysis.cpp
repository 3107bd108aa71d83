#include "msgain/ms_analysis.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>

#include "msgain/state_space.hpp"

namespace msgain {

namespace {

void require_stable_entries(const TransferMatrix& G) {
  for (int i = 0; i < G.rows(); ++i) {
    for (int j = 0; j < G.cols(); ++j) {
      if (!is_schur_stable(G.entry(i, j))) {
        throw std::invalid_argument("Theorem 1 requires a stable G");
      }
    }
  }
}

void require_square_match(const TransferMatrix& G,
                          const UncertaintyCovariance& pi) {
  if (G.rows() != G.cols()) {
    throw std::invalid_argument("loop block must be square");
  }
  if (pi.dim() != G.rows()) {
    throw std::invalid_argument("covariance size must match loop block");
  }
}

double grid_omega(int k, int n) {
  return -std::numbers::pi + 2.0 * std::numbers::pi * k / n;
}

MsVerdict make_verdict(double rho, MsMethod method, int grid_points) {
  MsVerdict v;
  v.rho = rho;
  v.stable = rho < 1.0;
  v.margin = 1.0 - rho;
  v.method = method;
  v.grid_points = grid_points;
  v.marginal = std::abs(rho - 1.0) < kMarginalBand;
  return v;
}

}  // namespace

double spectral_radius(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("spectral radius of non-square matrix");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("spectral radius of non-finite matrix");
  }
  if (m.rows() == 0) return 0.0;
  return m.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::MatrixXd ms_gain_matrix(const TransferMatrix& G,
                               const UncertaintyCovariance& pi,
                               int grid_points) {
  require_square_match(G, pi);
  require_stable_entries(G);
  if (grid_points < kMinGridPoints) {
    throw std::invalid_argument("grid_points below minimum");
  }

  const int m = G.rows();
  Eigen::MatrixXcd integral = Eigen::MatrixXcd::Zero(m * m, m * m);
  for (int k = 0; k < grid_points; ++k) {
    const Eigen::MatrixXcd g = G.evaluate(grid_omega(k, grid_points));
    integral += kron(g.conjugate(), g);
  }
  integral /= static_cast<double>(grid_points);

  // Conjugate symmetry of the grid makes the integral real; enforce it.
  const double max_real = integral.real().cwiseAbs().maxCoeff();
  const double max_imag = integral.imag().cwiseAbs().maxCoeff();
  if (max_imag > 1e-10 * max_real) {
    throw std::runtime_error("quadrature inconsistency");
  }

  Eigen::VectorXd pi_vec =
      Eigen::Map<const Eigen::VectorXd>(pi.matrix().data(), m * m);
  return pi_vec.asDiagonal() * integral.real();
}

MsVerdict is_ms_stable(const TransferMatrix& G, const UncertaintyCovariance& pi,
                       int grid_points) {
  const double rho = spectral_radius(ms_gain_matrix(G, pi, grid_points));
  return make_verdict(rho, MsMethod::kron_vec, grid_points);
}

PowerIterationError::PowerIterationError(double prev, double last)
    : std::runtime_error(
          "power iteration did not converge (last ratios " +
          std::to_string(prev) + ", " + std::to_string(last) + ")"),
      prev_ratio(prev),
      last_ratio(last) {}

MsOperator::MsOperator(const TransferMatrix& G, int grid_points)
    : size_(G.rows()), grid_points_(grid_points) {
  if (G.rows() != G.cols()) {
    throw std::invalid_argument("loop block must be square");
  }
  require_stable_entries(G);
  if (grid_points < kMinGridPoints) {
    throw std::invalid_argument("grid_points below minimum");
  }

  column_products_.assign(
      static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_),
      Eigen::MatrixXcd::Zero(size_, size_));
  for (int k = 0; k < grid_points_; ++k) {
    const Eigen::MatrixXcd g = G.evaluate(grid_omega(k, grid_points_));
    for (int a = 0; a < size_; ++a) {
      for (int b = 0; b < size_; ++b) {
        column_products_[static_cast<std::size_t>(a * size_ + b)] +=
            g.col(a) * g.col(b).adjoint();
      }
    }
  }
  for (auto& s : column_products_) s /= static_cast<double>(grid_points_);
}

Eigen::MatrixXd MsOperator::apply(const UncertaintyCovariance& pi,
                                  const Eigen::MatrixXd& X) const {
  if (pi.dim() != size_ || X.rows() != size_ || X.cols() != size_) {
    throw std::invalid_argument("operator dimension mismatch");
  }
  // G (Pi o X) G^H expands over the unit matrices E_ab into the cached
  // column outer products, with weights Pi_ab X_ab.
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(size_, size_);
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      const double w = pi.matrix()(a, b) * X(a, b);
      if (w != 0.0) {
        acc += w * column_products_[static_cast<std::size_t>(a * size_ + b)];
      }
    }
  }
  const double max_real = acc.real().cwiseAbs().maxCoeff();
  const double max_imag = acc.imag().cwiseAbs().maxCoeff();
  if (max_imag > 1e-10 * std::max(max_real, 1e-300)) {
    throw std::runtime_error("quadrature inconsistency");
  }
  Eigen::MatrixXd out = acc.real();
  return ((out + out.transpose()) / 2.0).eval();
}

double MsOperator::radius(const UncertaintyCovariance& pi, int max_iters,
                          double tol) const {
  Eigen::MatrixXd X = Eigen::MatrixXd::Identity(size_, size_);
  X /= X.norm();

  double prev_ratio = -1.0;
  int settled = 0;
  for (int it = 0; it < max_iters; ++it) {
    const Eigen::MatrixXd Y = apply(pi, X);
    const double ratio = Y.norm();
    if (ratio == 0.0) return 0.0;
    X = Y / ratio;
    if (prev_ratio >= 0.0 &&
        std::abs(ratio - prev_ratio) <= tol * std::max(1.0, ratio)) {
      if (++settled >= 3) return ratio;
    } else {
      settled = 0;
    }
    prev_ratio = ratio;
  }
  throw PowerIterationError(prev_ratio, apply(pi, X).norm());
}

Eigen::MatrixXd apply_ms_operator(const TransferMatrix& G,
                                  const UncertaintyCovariance& pi,
                                  const Eigen::MatrixXd& X, int grid_points) {
  return MsOperator(G, grid_points).apply(pi, X);
}

double ms_operator_radius(const TransferMatrix& G,
                          const UncertaintyCovariance& pi, int grid_points,
                          int max_iters, double tol) {
  return MsOperator(G, grid_points).radius(pi, max_iters, tol);
}

MsVerdict ms_stable_uncorrelated(const TransferMatrix& G,
                                 std::span<const double> sigmas_sq) {
  if (G.rows() != G.cols()) {
    throw std::invalid_argument("loop block must be square");
  }
  const int m = G.rows();
  if (static_cast<int>(sigmas_sq.size()) != m) {
    throw std::invalid_argument("variance list must match loop block");
  }
  require_stable_entries(G);

  Eigen::MatrixXd H(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      H(i, j) = h2_norm_sq(G.entry(i, j), H2Method::lyapunov);
    }
  }
  Eigen::VectorXd scales(m);
  for (int i = 0; i < m; ++i) {
    if (sigmas_sq[static_cast<std::size_t>(i)] < 0.0) {
      throw std::invalid_argument("variances must be nonnegative");
    }
    scales(i) = sigmas_sq[static_cast<std::size_t>(i)];
  }
  const double rho = spectral_radius(scales.asDiagonal() * H);
  return make_verdict(rho, MsMethod::closed_form, 0);
}

}  // namespace msgain

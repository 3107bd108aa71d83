// Mean-square small-gain analysis for diagonally structured, spatially
// correlated multiplicative uncertainty.
//
// A stable loop block G with uncertainty second moments Pi is mean-square
// stable iff the spectral radius of
//
//     diag(vec(Pi)) * (1/2pi) Int conj(G(e^{jw})) (x) G(e^{jw}) dw
//
// is below one. The same radius is reachable through the positive operator
//     T_Pi(X) = (1/2pi) Int G(e^{jw}) (Pi o X) G(e^{jw})^H dw
// acting on the PSD cone; both routes are provided and cross-checked.
#pragma once

#include <Eigen/Core>

#include <span>
#include <stdexcept>
#include <vector>

#include "msgain/h2.hpp"
#include "msgain/transfer_function.hpp"
#include "msgain/uncertainty.hpp"

namespace msgain {

inline constexpr int kMinGridPoints = 64;
inline constexpr int kDefaultPowerMaxIters = 100000;
inline constexpr double kDefaultPowerTol = 1e-12;
// Verdicts closer to the stability boundary than this are flagged marginal.
inline constexpr double kMarginalBand = 1e-6;

enum class MsMethod { kron_vec, power_iter, closed_form };

struct MsVerdict {
  double rho = 0.0;
  bool stable = false;
  double margin = 0.0;  // 1 - rho
  MsMethod method = MsMethod::kron_vec;
  int grid_points = 0;
  bool marginal = false;
};

/// Largest eigenvalue modulus of a real square matrix.
double spectral_radius(const Eigen::MatrixXd& m);

/// The m^2 x m^2 mean-square gain matrix diag(vec(pi)) * Int conj(G)(x)G.
/// Every entry of G must be strictly Schur stable. The frequency integral
/// is real by conjugate symmetry; its imaginary residue is checked against
/// 1e-10 of the largest real entry and discarded.
Eigen::MatrixXd ms_gain_matrix(const TransferMatrix& G,
                               const UncertaintyCovariance& pi,
                               int grid_points = kDefaultGridPoints);

/// Theorem-style verdict: rho of ms_gain_matrix, stable iff rho < 1.
MsVerdict is_ms_stable(const TransferMatrix& G, const UncertaintyCovariance& pi,
                       int grid_points = kDefaultGridPoints);

/// Thrown when the PSD-cone power iteration fails to settle; carries the
/// last two Rayleigh-style ratios for diagnosis.
struct PowerIterationError : std::runtime_error {
  PowerIterationError(double prev, double last);
  double prev_ratio;
  double last_ratio;
};

/// Frequency-cached form of X -> (1/2pi) Int G (Pi o X) G^H dw.
///
/// Construction integrates the column outer products of G over the grid
/// once; applications are then exact linear combinations of those images,
/// so the operator can be iterated cheaply for any Pi of matching size.
class MsOperator {
 public:
  MsOperator(const TransferMatrix& G, int grid_points = kDefaultGridPoints);

  int dim() const { return size_; }
  int grid_points() const { return grid_points_; }

  /// T_Pi(X) for symmetric X; the result is symmetrized.
  Eigen::MatrixXd apply(const UncertaintyCovariance& pi,
                        const Eigen::MatrixXd& X) const;

  /// Spectral radius of T_Pi by power iteration on the PSD cone, started
  /// at the identity. Converges when the Frobenius ratio settles.
  double radius(const UncertaintyCovariance& pi,
                int max_iters = kDefaultPowerMaxIters,
                double tol = kDefaultPowerTol) const;

 private:
  int size_;
  int grid_points_;
  // column_products_[a * size_ + b] = (1/N) sum_k (G_k e_a)(G_k e_b)^H
  std::vector<Eigen::MatrixXcd> column_products_;
};

/// One-shot convenience wrappers over MsOperator.
Eigen::MatrixXd apply_ms_operator(const TransferMatrix& G,
                                  const UncertaintyCovariance& pi,
                                  const Eigen::MatrixXd& X,
                                  int grid_points = kDefaultGridPoints);
double ms_operator_radius(const TransferMatrix& G,
                          const UncertaintyCovariance& pi,
                          int grid_points = kDefaultGridPoints,
                          int max_iters = kDefaultPowerMaxIters,
                          double tol = kDefaultPowerTol);

/// Uncorrelated special case: rho(diag(sigmas_sq) * H) with H the matrix
/// of squared H2 norms of the entries of G.
MsVerdict ms_stable_uncorrelated(const TransferMatrix& G,
                                 std::span<const double> sigmas_sq);

}  // namespace msgain

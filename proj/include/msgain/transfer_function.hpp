// Rational discrete-time LTI systems in the z-domain and grids of them.
#pragma once

#include <Eigen/Core>

#include <complex>
#include <vector>

#include "msgain/polynomial.hpp"

namespace msgain {

// Default margin for strict Schur stability and relative distance below
// which a pole/zero pair is treated as cancelled.
inline constexpr double kStabilityTol = 1e-9;
inline constexpr double kCancelTol = 1e-7;

/// Proper rational transfer function num(z)/den(z), coefficients by
/// descending powers. Coprimeness is not required; normalized() cancels
/// near-coincident pole/zero pairs.
class TransferFunction {
 public:
  TransferFunction(Polynomial num, Polynomial den);
  static TransferFunction constant(double c);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  int relative_degree() const { return den_.degree() - num_.degree(); }

  /// Frequency response num(e^{j omega}) / den(e^{j omega}).
  /// Throws if the denominator vanishes on the unit circle at omega.
  std::complex<double> evaluate(double omega) const;

  std::vector<std::complex<double>> poles() const;
  std::vector<std::complex<double>> zeros() const;

  /// Cancels pole/zero pairs closer than cancel_tol in relative distance.
  TransferFunction normalized(double cancel_tol = kCancelTol) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// True iff every pole (after cancellation within kCancelTol) has modulus
/// strictly below 1 - tol. The zero system is stable.
bool is_schur_stable(const TransferFunction& tf, double tol = kStabilityTol);

/// Dense m x p grid of transfer functions.
class TransferMatrix {
 public:
  explicit TransferMatrix(std::vector<std::vector<TransferFunction>> entries);
  static TransferMatrix scalar(TransferFunction tf);

  int rows() const { return static_cast<int>(entries_.size()); }
  int cols() const {
    return entries_.empty() ? 0 : static_cast<int>(entries_.front().size());
  }
  const TransferFunction& entry(int i, int j) const {
    return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  Eigen::MatrixXcd evaluate(double omega) const;

 private:
  std::vector<std::vector<TransferFunction>> entries_;
};

/// The 2x2 loop block [[PK, P], [K, 1]] / (1 + PK) for a constant gain K.
/// All entries share the denominator den(P) + K num(P), whose roots are
/// the closed-loop poles. Throws "singular loop" when 1 + PK vanishes
/// identically, and rejects gains that make the block improper.
TransferMatrix closed_loop_block(const TransferFunction& plant, double gain);

}  // namespace msgain

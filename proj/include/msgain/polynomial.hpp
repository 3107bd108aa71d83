// Real univariate polynomials in z, stored by descending powers.
#pragma once

#include <complex>
#include <span>
#include <vector>

namespace msgain {

// Root-residual tolerance used by the companion-matrix root finder.
inline constexpr double kRootTol = 1e-9;

/// A real polynomial a0*z^n + a1*z^(n-1) + ... + an with a0 != 0.
/// The zero polynomial is a distinct value (empty coefficient list,
/// degree() == -1); any leading zeros are trimmed on construction.
class Polynomial {
 public:
  Polynomial() = default;  // the zero polynomial
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial constant(double c);
  /// Rebuilds a real polynomial from a conjugate-closed root set.
  static Polynomial from_roots(std::span<const std::complex<double>> roots,
                               double leading = 1.0);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double leading() const;

  std::complex<double> operator()(std::complex<double> z) const;
  double operator()(double x) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(double factor) const;

  /// All degree() roots (with multiplicity), via eigenvalues of the
  /// balanced companion matrix. Throws for constant or zero input.
  std::vector<std::complex<double>> roots() const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<double> coeffs_;
};

}  // namespace msgain

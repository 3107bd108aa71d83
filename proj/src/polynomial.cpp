#include "msgain/polynomial.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace msgain {

namespace {

// Parlett-Reinsch style balancing; improves eigenvalue accuracy for
// companion matrices with widely scaled coefficients.
void balance_in_place(Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  const double gamma = 0.9;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      const double row_norm = m.row(i).lpNorm<1>();
      const double col_norm = m.col(i).lpNorm<1>();
      if (row_norm == 0.0 || col_norm == 0.0) continue;
      int exponent = 0;
      std::frexp(row_norm / col_norm, &exponent);
      exponent /= 2;
      if (exponent != 0) {
        const double scaled_col = std::ldexp(col_norm, exponent);
        const double scaled_row = std::ldexp(row_norm, -exponent);
        if (scaled_col + scaled_row < gamma * (col_norm + row_norm)) {
          changed = true;
          m.row(i) *= std::ldexp(1.0, -exponent);
          m.col(i) *= std::ldexp(1.0, exponent);
        }
      }
    }
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) {
  std::size_t first = 0;
  while (first < coeffs.size() && coeffs[first] == 0.0) ++first;
  coeffs_.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(first),
                 coeffs.end());
}

Polynomial Polynomial::constant(double c) {
  return Polynomial(std::vector<double>{c});
}

Polynomial Polynomial::from_roots(std::span<const std::complex<double>> roots,
                                  double leading) {
  std::vector<std::complex<double>> c{leading};
  for (const auto& r : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= r * c[i - 1];
  }
  double scale = 0.0;
  for (const auto& v : c) scale = std::max(scale, std::abs(v));
  std::vector<double> real_coeffs(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::abs(c[i].imag()) > 1e-9 * std::max(scale, 1.0)) {
      throw std::invalid_argument("root set is not conjugate-closed");
    }
    real_coeffs[i] = c[i].real();
  }
  return Polynomial(std::move(real_coeffs));
}

double Polynomial::leading() const {
  if (is_zero()) return 0.0;
  return coeffs_.front();
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (double c : coeffs_) acc = acc * z + c;
  return acc;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (double c : coeffs_) acc = acc * x + c;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
  std::vector<double> sum(n, 0.0);
  const std::size_t off_a = n - coeffs_.size();
  const std::size_t off_b = n - other.coeffs_.size();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[off_a + i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    sum[off_b + i] += other.coeffs_[i];
  }
  return Polynomial(std::move(sum));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial();
  std::vector<double> prod(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return Polynomial(std::move(prod));
}

Polynomial Polynomial::scaled(double factor) const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v *= factor;
  return Polynomial(std::move(c));
}

std::vector<std::complex<double>> Polynomial::roots() const {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("no roots defined");
  if (n == 1) return {std::complex<double>(-coeffs_[1] / coeffs_[0], 0.0)};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  companion.diagonal(-1).setOnes();
  for (int i = 0; i < n; ++i) {
    companion(i, n - 1) = -coeffs_[static_cast<std::size_t>(n - i)] / coeffs_[0];
  }
  balance_in_place(companion);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("companion eigenvalue solve failed");
  }
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

}  // namespace msgain

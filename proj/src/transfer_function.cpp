#include "msgain/transfer_function.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace msgain {

namespace {

double coeff_scale(const Polynomial& p) {
  double s = 0.0;
  for (double c : p.coeffs()) s += std::abs(c);
  return s;
}

}  // namespace

TransferFunction::TransferFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::invalid_argument("transfer function with zero denominator");
  }
  if (!num_.is_zero() && num_.degree() > den_.degree()) {
    throw std::invalid_argument("improper transfer function");
  }
}

TransferFunction TransferFunction::constant(double c) {
  return TransferFunction(Polynomial::constant(c), Polynomial::constant(1.0));
}

std::complex<double> TransferFunction::evaluate(double omega) const {
  const std::complex<double> z = std::polar(1.0, omega);
  const std::complex<double> d = den_(z);
  if (std::abs(d) <= 1e-12 * coeff_scale(den_)) {
    throw std::domain_error("evaluation at pole");
  }
  return num_(z) / d;
}

std::vector<std::complex<double>> TransferFunction::poles() const {
  if (den_.degree() < 1) return {};
  return den_.roots();
}

std::vector<std::complex<double>> TransferFunction::zeros() const {
  if (num_.degree() < 1) return {};
  return num_.roots();
}

TransferFunction TransferFunction::normalized(double cancel_tol) const {
  if (is_zero() || den_.degree() < 1 || num_.degree() < 1) return *this;

  auto zs = num_.roots();
  auto ps = den_.roots();
  std::vector<bool> zero_used(zs.size(), false);
  std::vector<std::complex<double>> kept_poles;
  for (const auto& p : ps) {
    bool cancelled = false;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      if (zero_used[i]) continue;
      if (std::abs(zs[i] - p) <= cancel_tol * std::max(1.0, std::abs(p))) {
        zero_used[i] = true;
        cancelled = true;
        break;
      }
    }
    if (!cancelled) kept_poles.push_back(p);
  }
  std::vector<std::complex<double>> kept_zeros;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (!zero_used[i]) kept_zeros.push_back(zs[i]);
  }
  if (kept_poles.size() == ps.size()) return *this;

  return TransferFunction(Polynomial::from_roots(kept_zeros, num_.leading()),
                          Polynomial::from_roots(kept_poles, den_.leading()));
}

bool is_schur_stable(const TransferFunction& tf, double tol) {
  if (tf.is_zero()) return true;
  const TransferFunction reduced = tf.normalized();
  for (const auto& p : reduced.poles()) {
    if (std::abs(p) >= 1.0 - tol) return false;
  }
  return true;
}

TransferMatrix::TransferMatrix(
    std::vector<std::vector<TransferFunction>> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front().empty()) {
    throw std::invalid_argument("empty transfer matrix");
  }
  const std::size_t p = entries_.front().size();
  for (const auto& row : entries_) {
    if (row.size() != p) {
      throw std::invalid_argument("ragged transfer matrix");
    }
  }
}

TransferMatrix TransferMatrix::scalar(TransferFunction tf) {
  return TransferMatrix({{std::move(tf)}});
}

Eigen::MatrixXcd TransferMatrix::evaluate(double omega) const {
  Eigen::MatrixXcd out(rows(), cols());
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) out(i, j) = entry(i, j).evaluate(omega);
  }
  return out;
}

TransferMatrix closed_loop_block(const TransferFunction& plant, double gain) {
  const Polynomial& n = plant.num();
  const Polynomial& d = plant.den();
  const Polynomial closed_den = d + n.scaled(gain);
  if (closed_den.is_zero()) {
    throw std::invalid_argument("singular loop");
  }
  std::vector<std::vector<TransferFunction>> entries;
  entries.push_back({TransferFunction(n.scaled(gain), closed_den),
                     TransferFunction(n, closed_den)});
  entries.push_back({TransferFunction(d.scaled(gain), closed_den),
                     TransferFunction(d, closed_den)});
  return TransferMatrix(std::move(entries));
}

}  // namespace msgain

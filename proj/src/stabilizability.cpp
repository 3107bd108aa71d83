#include "msgain/stabilizability.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "msgain/ms_analysis.hpp"

namespace msgain {

namespace {

void require_two_channel(const UncertaintyCovariance& pi) {
  if (pi.dim() != 2) {
    throw std::invalid_argument("first-order tests take a 2x2 covariance");
  }
}

void require_unstable(double pole) {
  if (std::abs(pole) <= 1.0) {
    throw std::invalid_argument("Theorem 2 requires an unstable plant");
  }
}

// Golden-section minimization of f on [lo, hi] down to width tol.
std::pair<double, double> golden_min(const std::function<double(double)>& f,
                                     double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  const double x = (a + b) / 2.0;
  return {x, f(x)};
}

StabilizabilityVerdict make_verdict(double lhs, StabilizabilityCondition cond) {
  StabilizabilityVerdict v;
  v.lhs = lhs;
  v.feasible = lhs < 1.0;
  v.condition = cond;
  v.sufficient_only = cond == StabilizabilityCondition::case2;
  return v;
}

}  // namespace

FirstOrderPlant::FirstOrderPlant(double pole_, std::optional<double> zero_)
    : pole(pole_), zero(zero_) {
  if (zero && *zero == pole) {
    throw std::invalid_argument("pole-zero coincidence");
  }
}

TransferFunction FirstOrderPlant::tf() const {
  const Polynomial den({1.0, -pole});
  if (zero) return TransferFunction(Polynomial({1.0, -*zero}), den);
  return TransferFunction(Polynomial::constant(1.0), den);
}

StabilizabilityVerdict condition_case1(double pole,
                                       const UncertaintyCovariance& pi) {
  require_two_channel(pi);
  require_unstable(pole);
  const double p2 = pole * pole;
  const double lhs =
      (pi.s1sq() - 2.0 * pi.s12()) * (p2 - 1.0) + pi.s2sq() * p2;
  return make_verdict(lhs, StabilizabilityCondition::case1);
}

double case1_closed_form_radius(double gain, double pole,
                                const UncertaintyCovariance& pi) {
  require_two_channel(pi);
  require_unstable(pole);
  const double closed_pole = pole - gain;
  if (std::abs(closed_pole) >= 1.0) {
    throw std::invalid_argument("closed loop unstable");
  }
  const double num = (pi.s1sq() - 2.0 * pi.s12()) * gain * gain +
                     2.0 * pi.s2sq() * pole * gain +
                     pi.s2sq() * (1.0 - pole * pole);
  return num / (1.0 - closed_pole * closed_pole);
}

double case1_optimal_gain(double pole) {
  require_unstable(pole);
  return pole - 1.0 / pole;
}

std::pair<double, double> jury_gain_interval(double pole, double zero) {
  require_unstable(pole);
  if (std::abs(zero) <= 1.0) {
    throw std::invalid_argument("Jury interval requires |zero| > 1");
  }
  if (zero == pole) {
    throw std::invalid_argument("pole-zero coincidence");
  }
  // Boundary gains placing the closed-loop pole at +1 and -1.
  const double at_plus_one = -(1.0 - pole) / (1.0 - zero);
  const double at_minus_one = -(1.0 + pole) / (1.0 + zero);
  return {std::min(at_plus_one, at_minus_one),
          std::max(at_plus_one, at_minus_one)};
}

double case2_closed_form_radius(double closed_loop_pole, double pole,
                                double zero, const UncertaintyCovariance& pi) {
  require_two_channel(pi);
  if (std::abs(closed_loop_pole) >= 1.0) {
    throw std::invalid_argument("closed loop unstable");
  }
  if (zero == pole) {
    throw std::invalid_argument("pole-zero coincidence");
  }
  const double x = closed_loop_pole;
  const double sep2 = (pole - zero) * (pole - zero);
  const double one_minus_x2 = 1.0 - x * x;
  const double t1 = pi.s1sq() * (x - pole) * (x - pole) *
                    (1.0 + zero * zero - 2.0 * zero * x);
  const double t2 = -2.0 * pi.s12() * (x - pole) * (x - zero) *
                    (1.0 + zero * pole - (zero + pole) * x);
  const double t3 = pi.s2sq() * (x - zero) * (x - zero) *
                    (1.0 + pole * pole - 2.0 * pole * x);
  return (t1 + t2 + t3) / (sep2 * one_minus_x2);
}

StabilizabilityVerdict condition_case2(double pole, double zero,
                                       const UncertaintyCovariance& pi) {
  require_two_channel(pi);
  require_unstable(pole);
  if (std::abs(zero) <= 1.0) {
    throw std::invalid_argument("Theorem 2(ii) requires |zero| > 1");
  }
  if (zero == pole) {
    throw std::invalid_argument("pole-zero coincidence");
  }
  const double p2 = pole * pole;
  const double z2 = zero * zero;
  const double sep2 = (pole - zero) * (pole - zero);
  const double lhs =
      (pi.s1sq() - 2.0 * pi.s12() + pi.s2sq()) * p2 * z2 / sep2 +
      (pi.s1sq() * p2 - 2.0 * pi.s12() * zero * pole + pi.s2sq() * z2) / sep2;
  return make_verdict(lhs, StabilizabilityCondition::case2);
}

std::pair<double, double> case2_min_radius(double pole, double zero,
                                           const UncertaintyCovariance& pi,
                                           int grid, double refine_tol) {
  require_two_channel(pi);
  require_unstable(pole);
  if (grid < 3) throw std::invalid_argument("grid too small");

  const auto g = [&](double x) {
    return case2_closed_form_radius(x, pole, zero, pi);
  };
  const double lo = -1.0 + kIntervalMargin;
  const double hi = 1.0 - kIntervalMargin;
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double x = lo + (hi - lo) * i / (grid - 1);
    const double v = g(x);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double bracket_lo =
      lo + (hi - lo) * std::max(0, best - 1) / (grid - 1);
  const double bracket_hi =
      lo + (hi - lo) * std::min(grid - 1, best + 1) / (grid - 1);
  auto [x_min, g_min] = golden_min(g, bracket_lo, bracket_hi, refine_tol);
  // The sharpened bound must dominate the single evaluation at zero.
  const double g0 = g(0.0);
  if (g0 < g_min) {
    x_min = 0.0;
    g_min = g0;
  }
  return {x_min, g_min};
}

StabilizabilityVerdict condition_consensus(double pole,
                                           const UncertaintyCovariance& pi) {
  require_two_channel(pi);
  if (std::abs(pole) < 1.0) {
    throw std::invalid_argument("consensus test requires |pole| >= 1");
  }
  const double lhs = 0.25 * (pi.s1sq() + 2.0 * pi.s12() + pi.s2sq()) *
                     (pole * pole - 1.0);
  return make_verdict(lhs, StabilizabilityCondition::consensus);
}

double optimal_consensus_gain(double pole, const UncertaintyCovariance& pi) {
  require_two_channel(pi);
  if (std::abs(pole) < 1.0) {
    throw std::invalid_argument("consensus test requires |pole| >= 1");
  }
  const double avg_var = 0.25 * (pi.s1sq() + 2.0 * pi.s12() + pi.s2sq());
  return pole / (2.0 * (1.0 + avg_var));
}

double consensus_contraction(double gain, double pole,
                             const UncertaintyCovariance& pi) {
  require_two_channel(pi);
  const double avg_var = 0.25 * (pi.s1sq() + 2.0 * pi.s12() + pi.s2sq());
  const double drift = pole - 2.0 * gain;
  return drift * drift + 4.0 * gain * gain * avg_var;
}

std::pair<double, double> gain_search(const TransferFunction& plant,
                                      const UncertaintyCovariance& pi,
                                      std::pair<double, double> interval,
                                      int grid, int grid_points,
                                      double refine_tol) {
  require_two_channel(pi);
  if (!(interval.first < interval.second)) {
    throw std::invalid_argument("no stabilizing constant gain");
  }
  if (grid < 3) throw std::invalid_argument("grid too small");
  if (grid_points < kMinGridPoints) {
    throw std::invalid_argument("grid_points below minimum");
  }

  // Frequency samples of the plant's numerator and denominator are shared
  // across all gains; each gain only reassembles the 2x2 block response.
  std::vector<std::complex<double>> num_s(static_cast<std::size_t>(grid_points));
  std::vector<std::complex<double>> den_s(static_cast<std::size_t>(grid_points));
  for (int k = 0; k < grid_points; ++k) {
    const std::complex<double> z = std::polar(
        1.0, -std::numbers::pi + 2.0 * std::numbers::pi * k / grid_points);
    num_s[static_cast<std::size_t>(k)] = plant.num()(z);
    den_s[static_cast<std::size_t>(k)] = plant.den()(z);
  }

  const auto closed_loop_stable = [&](double gain) {
    const Polynomial closed = plant.den() + plant.num().scaled(gain);
    if (closed.degree() < 1) return !closed.is_zero();
    for (const auto& r : closed.roots()) {
      if (std::abs(r) >= 1.0) return false;
    }
    return true;
  };

  const Eigen::VectorXd pi_vec =
      Eigen::Map<const Eigen::VectorXd>(pi.matrix().data(), 4);
  const auto radius_at = [&](double gain) {
    Eigen::Matrix4cd integral = Eigen::Matrix4cd::Zero();
    Eigen::Matrix2cd g;
    for (int k = 0; k < grid_points; ++k) {
      const std::complex<double> n = num_s[static_cast<std::size_t>(k)];
      const std::complex<double> d = den_s[static_cast<std::size_t>(k)];
      const std::complex<double> cd = d + gain * n;
      g(0, 0) = gain * n / cd;
      g(0, 1) = n / cd;
      g(1, 0) = gain * d / cd;
      g(1, 1) = d / cd;
      const Eigen::Matrix2cd gc = g.conjugate();
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          integral.block<2, 2>(2 * a, 2 * b) += gc(a, b) * g;
        }
      }
    }
    integral /= static_cast<double>(grid_points);
    const Eigen::Matrix4d gain_matrix =
        pi_vec.asDiagonal() * integral.real();
    return spectral_radius(gain_matrix);
  };

  const double width = interval.second - interval.first;
  const double margin = kIntervalMargin * std::max(1.0, width);
  const double lo = interval.first + margin;
  const double hi = interval.second - margin;
  if (!(lo < hi)) throw std::invalid_argument("no stabilizing constant gain");

  int best = -1;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double k = lo + (hi - lo) * i / (grid - 1);
    if (!closed_loop_stable(k)) continue;
    const double v = radius_at(k);
    // Ties resolve to the smallest gain; the scan moves left to right.
    if (v < best_val - 1e-12) {
      best_val = v;
      best = i;
    }
  }
  if (best < 0) throw std::invalid_argument("no stabilizing constant gain");

  const double bracket_lo = lo + (hi - lo) * std::max(0, best - 1) / (grid - 1);
  const double bracket_hi =
      lo + (hi - lo) * std::min(grid - 1, best + 1) / (grid - 1);
  return golden_min(radius_at, bracket_lo, bracket_hi, refine_tol);
}

}  // namespace msgain

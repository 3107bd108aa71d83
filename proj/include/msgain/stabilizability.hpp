// Closed-form mean-square stabilizability and consensusability tests for
// first-order loops, plus the gain-interval and gain-search machinery that
// cross-validates them against the general spectral-radius test.
#pragma once

#include <optional>
#include <utility>

#include "msgain/h2.hpp"
#include "msgain/transfer_function.hpp"
#include "msgain/uncertainty.hpp"

namespace msgain {

inline constexpr int kDefaultGainGrid = 2048;
inline constexpr double kDefaultRefineTol = 1e-8;
// Interior margin keeping scans away from interval endpoints, where the
// closed-loop pole touches the unit circle.
inline constexpr double kIntervalMargin = 1e-6;

/// 1/(z - pole), or (z - zero)/(z - pole) when the nonminimum-phase zero
/// is present. Pole and zero must differ.
struct FirstOrderPlant {
  double pole;
  std::optional<double> zero;

  explicit FirstOrderPlant(double pole_, std::optional<double> zero_ = {});
  bool has_zero() const { return zero.has_value(); }
  TransferFunction tf() const;
};

enum class StabilizabilityCondition { case1, case2, consensus };

struct StabilizabilityVerdict {
  double lhs = 0.0;
  bool feasible = false;  // lhs < 1
  StabilizabilityCondition condition = StabilizabilityCondition::case1;
  bool sufficient_only = false;  // true exactly for case2
};

/// Minimum-phase first-order test: (s1sq - 2 s12)(p^2 - 1) + s2sq p^2 < 1.
/// Necessary and sufficient; requires |pole| > 1.
StabilizabilityVerdict condition_case1(double pole,
                                       const UncertaintyCovariance& pi);

/// Mean-square radius of the case-1 closed loop at constant gain K,
/// in closed form. K must lie in the stabilizing interval
/// (pole - 1, pole + 1).
double case1_closed_form_radius(double gain, double pole,
                                const UncertaintyCovariance& pi);

/// Gain minimizing the case-1 radius: pole - 1/pole.
double case1_optimal_gain(double pole);

/// Open interval of constant gains rendering the nonminimum-phase loop
/// Schur stable, from the two Jury boundary gains.
std::pair<double, double> jury_gain_interval(double pole, double zero);

/// Mean-square radius of the case-2 closed loop, parameterized by the
/// closed-loop pole location x in (-1, 1).
double case2_closed_form_radius(double closed_loop_pole, double pole,
                                double zero, const UncertaintyCovariance& pi);

/// Nonminimum-phase sufficient test; lhs equals the case-2 radius at
/// closed-loop pole 0.
StabilizabilityVerdict condition_case2(double pole, double zero,
                                       const UncertaintyCovariance& pi);

/// Sharper case-2 bound: minimum of the closed-form radius over the
/// closed-loop pole, by grid scan plus golden-section refinement.
/// Returns (arg min, min value); never exceeds the radius at 0.
std::pair<double, double> case2_min_radius(
    double pole, double zero, const UncertaintyCovariance& pi,
    int grid = kDefaultGainGrid, double refine_tol = kDefaultRefineTol);

/// Two-agent consensus test: (s1sq + 2 s12 + s2sq)(p^2 - 1)/4 < 1.
/// Necessary and sufficient; requires |pole| >= 1.
StabilizabilityVerdict condition_consensus(double pole,
                                           const UncertaintyCovariance& pi);

/// Gain minimizing the per-step second-moment contraction of the two-agent
/// error; the contraction at this gain is below one exactly when
/// condition_consensus is feasible.
double optimal_consensus_gain(double pole, const UncertaintyCovariance& pi);
double consensus_contraction(double gain, double pole,
                             const UncertaintyCovariance& pi);

/// Scans constant gains over a stabilizing interval, evaluating the
/// spectral-radius test of the closed-loop block at each gain, then
/// refines the minimizer by golden section. Ties break to the smaller K.
std::pair<double, double> gain_search(const TransferFunction& plant,
                                      const UncertaintyCovariance& pi,
                                      std::pair<double, double> interval,
                                      int grid = kDefaultGainGrid,
                                      int grid_points = kDefaultGridPoints,
                                      double refine_tol = kDefaultRefineTol);

}  // namespace msgain

// Squared H2 norms of stable scalar systems, by Gramian or by quadrature.
#pragma once

#include "msgain/transfer_function.hpp"

namespace msgain {

inline constexpr int kDefaultGridPoints = 4096;

enum class H2Method { lyapunov, quadrature };

/// (1/2pi) Int |tf(e^{j w})|^2 dw for a strictly Schur-stable tf.
/// The lyapunov method uses the controllability Gramian of the cancelled
/// realization; quadrature uses the uniform trapezoid rule on [-pi, pi],
/// which converges spectrally for these smooth periodic integrands.
double h2_norm_sq(const TransferFunction& tf,
                  H2Method method = H2Method::lyapunov,
                  int grid_points = kDefaultGridPoints);

}  // namespace msgain

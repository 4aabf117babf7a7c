#pragma once

#include <cmath>
#include <concepts>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "catenoid/kernels/solver_config.hpp"

namespace catenoid::kernels {

/// Integrand that receives, besides the abscissa x, its distances to the left
/// and right endpoints computed without cancellation. Use it whenever the
/// integrand is singular at an endpoint.
template <class F>
concept EndpointAwareIntegrand = std::invocable<F, double, double, double>;

struct QuadratureOptions {
  int min_level = 3;
  int max_level = 12;
};

/// Double-exponential (tanh-sinh) quadrature of f over [a, b] with finite
/// a < b. The step is halved level by level until two successive estimates
/// agree to `tol` (relative to max(1, |I|)).
template <class F>
double quad_tanh_sinh(F&& f, double a, double b, double tol, QuadratureOptions opt = {}) {
  if (!(tol > 0.0)) throw std::invalid_argument("quad_tanh_sinh: tol must be positive");
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("quad_tanh_sinh: finite limits required");
  if (a == b) return 0.0;
  if (a > b) return -quad_tanh_sinh(f, b, a, tol, opt);

  const double half = 0.5 * (b - a);
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double t_max = 6.6;

  auto eval = [&](double x, double dl, double dr) {
    if constexpr (EndpointAwareIntegrand<F>) {
      return f(x, dl, dr);
    } else {
      return f(x);
    }
  };

  // Weighted contribution of the symmetric node pair at +t and -t.
  auto pair = [&](double t, bool& exhausted) {
    const double u = half_pi * std::sinh(t);
    const double q = std::exp(-2.0 * u);
    const double near = half * 2.0 * q / (1.0 + q);  // distance to the nearer endpoint
    const double far = half * 2.0 / (1.0 + q);
    const double w = half_pi * std::cosh(t) * 4.0 * q / ((1.0 + q) * (1.0 + q));
    if (near == 0.0 || w == 0.0) {
      exhausted = true;
      return 0.0;
    }
    const double x_right = b - near;
    const double x_left = a + near;
    if constexpr (!EndpointAwareIntegrand<F>) {
      if (x_right >= b || x_left <= a) {
        exhausted = true;
        return 0.0;
      }
    }
    const double s = w * (eval(x_right, far, near) + eval(x_left, near, far));
    if (!std::isfinite(s)) {
      std::ostringstream os;
      os << "quad_tanh_sinh: non-finite integrand near t = " << t;
      throw NonConvergence(os.str(), t);
    }
    return s;
  };

  // Level 0: unit spacing.
  double sum = half_pi * eval(a + half, half, half);
  for (int k = 1; static_cast<double>(k) <= t_max; ++k) {
    bool done = false;
    sum += pair(static_cast<double>(k), done);
    if (done) break;
  }
  double h = 1.0;
  double estimate = half * h * sum;

  for (int level = 1; level <= opt.max_level; ++level) {
    h *= 0.5;
    for (int k = 1;; k += 2) {
      const double t = k * h;
      if (t > t_max) break;
      bool done = false;
      sum += pair(t, done);
      if (done) break;
    }
    const double next = half * h * sum;
    const double diff = std::abs(next - estimate);
    estimate = next;
    if (level >= opt.min_level && diff <= tol * std::max(1.0, std::abs(next))) return next;
  }
  throw NonConvergence("quad_tanh_sinh: no convergence at maximum level", estimate);
}

}  // namespace catenoid::kernels

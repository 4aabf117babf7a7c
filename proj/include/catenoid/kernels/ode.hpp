#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>

#include "catenoid/kernels/solver_config.hpp"

namespace catenoid::kernels {

template <std::size_t D>
using State = std::array<double, D>;

namespace detail {

// Dormand-Prince 5(4) tableau.
struct DoPri5 {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                          a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
};

template <std::size_t D>
bool all_finite(const State<D>& y) {
  return std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
}

template <std::size_t D>
double error_norm(const State<D>& err, const State<D>& y0, const State<D>& y1,
                  const SolverConfig& cfg) {
  double sum = 0.0;
  for (std::size_t i = 0; i < D; ++i) {
    const double scale = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double r = err[i] / scale;
    sum += r * r;
  }
  return std::sqrt(sum / static_cast<double>(D));
}

template <std::size_t D, class Rhs>
double initial_step(Rhs& rhs, double x0, const State<D>& y0, const State<D>& f0, double span,
                    const SolverConfig& cfg) {
  // Hairer-Norsett-Wanner starting step heuristic, order 5.
  double d0 = 0.0, d1 = 0.0;
  for (std::size_t i = 0; i < D; ++i) {
    const double sk = cfg.abs_tol + cfg.rel_tol * std::abs(y0[i]);
    d0 += (y0[i] / sk) * (y0[i] / sk);
    d1 += (f0[i] / sk) * (f0[i] / sk);
  }
  d0 = std::sqrt(d0 / D);
  d1 = std::sqrt(d1 / D);
  double h = (d0 < 1e-10 || d1 < 1e-10) ? 1e-6 : 0.01 * d0 / d1;
  h = std::min(h, std::abs(span));
  State<D> y1;
  for (std::size_t i = 0; i < D; ++i) y1[i] = y0[i] + std::copysign(h, span) * f0[i];
  const State<D> f1 = rhs(x0 + std::copysign(h, span), y1);
  double d2 = 0.0;
  for (std::size_t i = 0; i < D; ++i) {
    const double sk = cfg.abs_tol + cfg.rel_tol * std::abs(y0[i]);
    d2 += ((f1[i] - f0[i]) / sk) * ((f1[i] - f0[i]) / sk);
  }
  d2 = std::sqrt(d2 / D) / h;
  if (!std::isfinite(d2)) return h * 1e-3;
  const double dm = std::max(d1, d2);
  const double h1 = dm <= 1e-15 ? std::max(1e-6, h * 1e-3) : std::pow(0.01 / dm, 1.0 / 5.0);
  return std::min({100.0 * h, h1, std::abs(span)});
}

}  // namespace detail

/// Observer that leaves the state untouched.
struct NoObserver {
  template <std::size_t D>
  bool operator()(double, State<D>&) const noexcept {
    return false;
  }
};

/// Integrates y' = rhs(x, y) from x0 to x1 with an embedded Dormand-Prince 5(4)
/// pair and PI step-size control (mixed abs/rel error per component).
///
/// After every accepted step `observer(x, y)` is called; it may rescale `y` in
/// place and must return true if it did so.
///
/// Throws NonConvergence on step-budget exhaustion or step underflow; its
/// last_x() is the abscissa reached.
template <std::size_t D, class Rhs, class Observer = NoObserver>
State<D> integrate_ivp(Rhs&& rhs, State<D> y, double x0, double x1, const SolverConfig& cfg,
                       Observer&& observer = {}) {
  using T = detail::DoPri5;
  cfg.validate();
  const double span = x1 - x0;
  if (span == 0.0) return y;
  if (!std::isfinite(span)) throw NonConvergence("integrate_ivp: infinite span", x0);
  const double dir = span > 0 ? 1.0 : -1.0;

  constexpr double safe = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
  constexpr double fac_min = 0.2, fac_max = 10.0;  // bounds on h_new / h

  double x = x0;
  State<D> k1 = rhs(x, y);
  if (!detail::all_finite(k1)) throw NonConvergence("integrate_ivp: non-finite initial slope", x);
  double h = cfg.initial_step ? std::min(*cfg.initial_step, std::abs(span))
                              : detail::initial_step<D>(rhs, x, y, k1, span, cfg);
  double fac_old = 1e-4;
  bool last_rejected = false;

  State<D> yt, k2, k3, k4, k5, k6, k7, y_new, err;
  for (long step = 0; step < cfg.max_steps; ++step) {
    const double remaining = x1 - x;
    bool last = false;
    if (h >= std::abs(remaining) * (1.0 - 1e-12)) {
      h = std::abs(remaining);
      last = true;
    }
    if (h <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
      std::ostringstream os;
      os << "integrate_ivp: step size underflow at x = " << x;
      throw NonConvergence(os.str(), x);
    }
    const double hs = dir * h;

    for (std::size_t i = 0; i < D; ++i) yt[i] = y[i] + hs * T::a21 * k1[i];
    k2 = rhs(x + T::c2 * hs, yt);
    for (std::size_t i = 0; i < D; ++i) yt[i] = y[i] + hs * (T::a31 * k1[i] + T::a32 * k2[i]);
    k3 = rhs(x + T::c3 * hs, yt);
    for (std::size_t i = 0; i < D; ++i)
      yt[i] = y[i] + hs * (T::a41 * k1[i] + T::a42 * k2[i] + T::a43 * k3[i]);
    k4 = rhs(x + T::c4 * hs, yt);
    for (std::size_t i = 0; i < D; ++i)
      yt[i] = y[i] + hs * (T::a51 * k1[i] + T::a52 * k2[i] + T::a53 * k3[i] + T::a54 * k4[i]);
    k5 = rhs(x + T::c5 * hs, yt);
    for (std::size_t i = 0; i < D; ++i)
      yt[i] = y[i] + hs * (T::a61 * k1[i] + T::a62 * k2[i] + T::a63 * k3[i] + T::a64 * k4[i] +
                           T::a65 * k5[i]);
    k6 = rhs(x + hs, yt);
    for (std::size_t i = 0; i < D; ++i)
      y_new[i] = y[i] + hs * (T::a71 * k1[i] + T::a73 * k3[i] + T::a74 * k4[i] + T::a75 * k5[i] +
                              T::a76 * k6[i]);
    k7 = rhs(x + hs, y_new);
    for (std::size_t i = 0; i < D; ++i)
      err[i] = hs * (T::e1 * k1[i] + T::e3 * k3[i] + T::e4 * k4[i] + T::e5 * k5[i] +
                     T::e6 * k6[i] + T::e7 * k7[i]);

    double e = detail::error_norm<D>(err, y, y_new, cfg);
    if (!std::isfinite(e) || !detail::all_finite(y_new) || !detail::all_finite(k7)) {
      h *= fac_min;
      last_rejected = true;
      continue;
    }

    const double fac11 = std::pow(std::max(e, 1e-300), expo1);
    if (e <= 1.0) {
      double fac = fac11 / std::pow(fac_old, beta);
      fac = std::clamp(fac / safe, 1.0 / fac_max, 1.0 / fac_min);
      double h_new = h / fac;
      if (last_rejected) h_new = std::min(h_new, h);
      fac_old = std::max(e, 1e-4);
      x = last ? x1 : x + hs;
      y = y_new;
      k1 = k7;
      if (observer(x, y)) k1 = rhs(x, y);
      if (last) return y;
      h = h_new;
      last_rejected = false;
    } else {
      h /= std::min(1.0 / fac_min, fac11 / safe);
      last_rejected = true;
    }
  }
  std::ostringstream os;
  os << "integrate_ivp: step budget of " << cfg.max_steps << " exhausted at x = " << x;
  throw NonConvergence(os.str(), x);
}

}  // namespace catenoid::kernels

#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "catenoid/kernels/solver_config.hpp"

namespace catenoid::kernels {

struct Bracket {
  double lo;
  double hi;
};

/// Brent's method (inverse quadratic interpolation / secant / bisection).
/// The returned root x* satisfies: f changes sign across an interval of width
/// at most `tol` containing x* (or f(x*) == 0).
template <class F>
double find_root(F&& f, Bracket bracket, double tol, int max_iter = 300) {
  if (!(bracket.lo < bracket.hi)) throw std::invalid_argument("find_root: need lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("find_root: tol must be positive");

  double a = bracket.lo, b = bracket.hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    std::ostringstream os;
    os << "find_root: no sign change on [" << a << ", " << b << "] (f = " << fa << ", " << fb
       << ")";
    throw std::domain_error(os.str());
  }

  double c = a, fc = fa;
  double d = b - a, e = d;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    // b is the best estimate, c the contrapoint.
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : std::copysign(tol1, xm);
    fb = f(b);
  }
  throw NonConvergence("find_root: iteration budget exhausted", b);
}

}  // namespace catenoid::kernels

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace catenoid::kernels {

/// Tolerances and budgets shared by the ODE integrator, the quadrature and
/// the root finder.
struct SolverConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  double quad_tol = 1e-13;
  double root_tol = 1e-13;
  long max_steps = 2'000'000;
  std::optional<double> initial_step;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(quad_tol > 0.0) || !(root_tol > 0.0))
      throw std::invalid_argument("SolverConfig: tolerances must be positive");
    if (max_steps < 1)
      throw std::invalid_argument("SolverConfig: max_steps must be >= 1");
    if (initial_step && !(*initial_step > 0.0))
      throw std::invalid_argument("SolverConfig: initial_step must be positive");
  }

  /// Config derived from a single user-facing tolerance `tol`:
  /// ODE rel = tol, ODE abs = tol/100, quadrature and root = tol/10.
  static SolverConfig from_tolerance(double tol) {
    SolverConfig c;
    c.rel_tol = tol;
    c.abs_tol = tol / 100.0;
    c.quad_tol = tol / 10.0;
    c.root_tol = tol / 10.0;
    c.validate();
    return c;
  }

  SolverConfig halved() const {
    SolverConfig c = *this;
    c.rel_tol /= 2.0;
    c.abs_tol /= 2.0;
    c.quad_tol /= 2.0;
    c.root_tol /= 2.0;
    return c;
  }
};

/// Raised when an iterative kernel fails to reach its target. `last_x` is the
/// furthest abscissa (ODE) or best estimate (root, quadrature) reached.
class NonConvergence : public std::runtime_error {
public:
  NonConvergence(const std::string& what, double last_x)
      : std::runtime_error(what), last_x_(last_x) {}
  double last_x() const noexcept { return last_x_; }

private:
  double last_x_;
};

}  // namespace catenoid::kernels

#pragma once

#include <map>
#include <shared_mutex>

#include "catenoid/kernels/ode.hpp"
#include "catenoid/kernels/solver_config.hpp"

namespace catenoid::geometry {

using kernels::SolverConfig;

/// Exponent α = 2(n-1) of the profile equation f_x = sqrt(f^α - 1).
constexpr double alpha_of(int n) { return 2.0 * (n - 1); }

struct ProfilePoint {
  double x;
  double f;
  double f_x;
};

/// Free-boundary catenoid parameters. L is +inf for n = 2.
struct CatenoidGeometry {
  int n = 0;
  double alpha = 0.0;
  double L = 0.0;
  double W = 0.0;
  double H = 0.0;
  double R = 0.0;
  /// W obtained through the ODE/root route, kept for the route cross-check.
  double W_ode = 0.0;
};

/// Right-hand side of f_xx = (α/2)(1 + f_x^2)/f as a first-order system on (f, f_x).
struct ProfileRhs {
  double alpha;
  kernels::State<2> operator()(double, const kernels::State<2>& y) const {
    return {y[1], 0.5 * alpha * (1.0 + y[1] * y[1]) / y[0]};
  }
};

ProfilePoint profile(int n, double x, const SolverConfig& config = {});
ProfilePoint profile_alpha(double alpha, double x, const SolverConfig& config = {});

/// g(y) = ∫_1^y (s^α - 1)^{-1/2} ds, the inverse of the profile.
double inverse_profile(int n, double y, double tol = 1e-13);
double inverse_profile_alpha(double alpha, double y, double tol = 1e-13);

/// Half-length L_α = B(1/2 - 1/α, 1/2)/α of the maximal interval; +inf at α = 2.
double half_length(double alpha);

/// W as the root of x f_x(x)/f(x) - 1 (profile integration + Brent).
double solve_w_route(double alpha, const SolverConfig& config = {});

/// H as the root of g(y) sqrt(y^α - 1)/y - 1 (quadrature + Brent).
double solve_h_route(double alpha, const SolverConfig& config = {});

/// Solves L, W, H, R for dimension n. H comes from the quadrature route and
/// W = g(H); the ODE route must agree on W to `route_agreement`.
CatenoidGeometry solve_geometry(int n, const SolverConfig& config = {},
                                double route_agreement = 1e-8);

/// Thread-safe memo of solve_geometry for a fixed config.
class GeometryCache {
public:
  explicit GeometryCache(SolverConfig config = {}) : config_(config) {}

  const CatenoidGeometry& get(int n);
  const SolverConfig& config() const noexcept { return config_; }

private:
  SolverConfig config_;
  std::map<int, CatenoidGeometry> entries_;
  std::shared_mutex mutex_;
};

}  // namespace catenoid::geometry

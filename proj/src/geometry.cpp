#include "catenoid/geometry.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "catenoid/kernels/quadrature.hpp"
#include "catenoid/kernels/roots.hpp"
#include "catenoid/kernels/special.hpp"

namespace catenoid::geometry {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_alpha(double alpha) {
  if (!(alpha >= 2.0)) throw std::domain_error("catenoid geometry requires alpha >= 2 (n >= 2)");
}

// log(y^α - 1) for y = 1 + u, u > 0.
double log_power_minus_one(double alpha, double u) {
  const double z = alpha * std::log1p(u);
  if (z > 30.0) return z + std::log1p(-std::exp(-z));
  return std::log(std::expm1(z));
}

}  // namespace

ProfilePoint profile_alpha(double alpha, double x, const SolverConfig& config) {
  check_alpha(alpha);
  if (!(x >= 0.0)) throw std::domain_error("profile: x must be non-negative");
  if (x >= half_length(alpha)) {
    std::ostringstream os;
    os << "profile: x = " << x << " lies outside the maximal interval (L = " << half_length(alpha)
       << ")";
    throw std::domain_error(os.str());
  }
  const auto y = kernels::integrate_ivp<2>(ProfileRhs{alpha}, {1.0, 0.0}, 0.0, x, config);
  return {x, y[0], y[1]};
}

ProfilePoint profile(int n, double x, const SolverConfig& config) {
  return profile_alpha(alpha_of(n), x, config);
}

double inverse_profile_alpha(double alpha, double y, double tol) {
  check_alpha(alpha);
  if (!(y >= 1.0)) throw std::domain_error("inverse_profile: y must be >= 1");
  if (y == 1.0) return 0.0;
  // The integrand is singular like (α (s-1))^{-1/2} at s = 1; evaluate it from
  // the exact distance to that endpoint.
  auto integrand = [alpha](double, double dl, double) {
    return std::exp(-0.5 * log_power_minus_one(alpha, dl));
  };
  return kernels::quad_tanh_sinh(integrand, 1.0, y, tol);
}

double inverse_profile(int n, double y, double tol) {
  return inverse_profile_alpha(alpha_of(n), y, tol);
}

double half_length(double alpha) {
  check_alpha(alpha);
  if (alpha == 2.0) return kInf;
  return kernels::beta(0.5 - 1.0 / alpha, 0.5) / alpha;
}

double solve_w_route(double alpha, const SolverConfig& config) {
  check_alpha(alpha);
  const double L = half_length(alpha);
  auto residual = [&](double x) {
    if (x >= L) return 1.0;
    try {
      const auto y = kernels::integrate_ivp<2>(ProfileRhs{alpha}, {1.0, 0.0}, 0.0, x, config);
      return x * y[1] / y[0] - 1.0;
    } catch (const kernels::NonConvergence&) {
      return 1.0;  // blow-up before x: beyond the maximal interval
    }
  };
  kernels::Bracket bracket{1e-6, 1.0};
  for (int i = 0; residual(bracket.hi) <= 0.0; ++i) {
    if (i > 60) throw std::runtime_error("solve_w_route: could not bracket W");
    bracket.hi *= 2.0;
  }
  return kernels::find_root(residual, bracket, config.root_tol);
}

double solve_h_route(double alpha, const SolverConfig& config) {
  check_alpha(alpha);
  // Parametrised by u = y - 1 to keep resolution when H is close to 1.
  auto residual = [&](double u) {
    const double g = inverse_profile_alpha(alpha, 1.0 + u, config.quad_tol);
    return std::exp(std::log(g) + 0.5 * log_power_minus_one(alpha, u) - std::log1p(u)) - 1.0;
  };
  kernels::Bracket bracket{1e-9, 1.0};
  for (int i = 0; residual(bracket.hi) <= 0.0; ++i) {
    if (i > 60) throw std::runtime_error("solve_h_route: could not bracket H");
    bracket.hi *= 2.0;
  }
  return 1.0 + kernels::find_root(residual, bracket, config.root_tol);
}

CatenoidGeometry solve_geometry(int n, const SolverConfig& config, double route_agreement) {
  if (n < 2) throw std::domain_error("solve_geometry: n must be >= 2");
  config.validate();
  CatenoidGeometry geo;
  geo.n = n;
  geo.alpha = alpha_of(n);
  geo.L = half_length(geo.alpha);
  geo.H = solve_h_route(geo.alpha, config);
  geo.W = inverse_profile_alpha(geo.alpha, geo.H, config.quad_tol);
  geo.R = std::hypot(geo.W, geo.H);
  geo.W_ode = solve_w_route(geo.alpha, config);
  if (!(std::abs(geo.W - geo.W_ode) <= route_agreement)) {
    std::ostringstream os;
    os.precision(17);
    os << "solve_geometry: routes disagree at n = " << n << " (quadrature W = " << geo.W
       << ", ODE W = " << geo.W_ode << ")";
    throw std::runtime_error(os.str());
  }
  return geo;
}

const CatenoidGeometry& GeometryCache::get(int n) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(n); it != entries_.end()) return it->second;
  }
  CatenoidGeometry geo = solve_geometry(n, config_);
  std::unique_lock lock(mutex_);
  return entries_.try_emplace(n, geo).first->second;
}

}  // namespace catenoid::geometry

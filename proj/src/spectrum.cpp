#include "catenoid/spectrum.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace catenoid::spectrum {

namespace {

constexpr double kRenormThreshold = 1e100;

void check_mode(int n, int m) {
  if (n < 2) throw std::domain_error("spectrum: n must be >= 2");
  if (m < 0) throw std::domain_error("spectrum: m must be >= 0");
}

kernels::State<4> initial_state(Parity parity) {
  return parity == Parity::even ? kernels::State<4>{1.0, 0.0, 1.0, 0.0}
                                : kernels::State<4>{1.0, 0.0, 0.0, 1.0};
}

}  // namespace

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parse_parity(std::string_view text) {
  if (text == "even" || text == "0") return Parity::even;
  if (text == "odd" || text == "1") return Parity::odd;
  throw std::invalid_argument("unknown parity '" + std::string(text) + "'");
}

ModeSolution jacobi_mode_solution(const CatenoidGeometry& geo, int m, Parity parity,
                                  const SolverConfig& config) {
  check_mode(geo.n, m);
  ModeSolution sol;
  sol.n = geo.n;
  sol.m = m;
  sol.parity = parity;

  auto observer = [&sol](double x, kernels::State<4>& y) {
    if (x > 0.0 && !(y[2] > 0.0)) sol.sign_change = true;
    if (std::abs(y[2]) > kRenormThreshold || std::abs(y[3]) > kRenormThreshold) {
      y[2] /= kRenormThreshold;
      y[3] /= kRenormThreshold;
      sol.log_scale += std::log(kRenormThreshold);
      return true;
    }
    return false;
  };
  const auto y = kernels::integrate_ivp<4>(ModeRhs{double(geo.n), double(m)},
                                           initial_state(parity), 0.0, geo.W, config, observer);
  sol.phi_W = y[2];
  sol.phiX_W = y[3];
  // The even m = 0 field vanishes at W; its terminal sign is not informative.
  if (m == 0 && parity == Parity::even) sol.sign_change = false;
  return sol;
}

ModeSolution jacobi_mode_solution(int n, int m, Parity parity, const SolverConfig& config) {
  return jacobi_mode_solution(geometry::solve_geometry(n, config), m, parity, config);
}

std::vector<std::array<double, 2>> jacobi_mode_values(int n, int m, Parity parity,
                                                      std::span<const double> xs,
                                                      const SolverConfig& config) {
  check_mode(n, m);
  std::vector<std::array<double, 2>> out;
  out.reserve(xs.size());
  auto y = initial_state(parity);
  double x = 0.0;
  const ModeRhs rhs{double(n), double(m)};
  for (double target : xs) {
    if (target < x) throw std::invalid_argument("jacobi_mode_values: abscissae must ascend");
    y = kernels::integrate_ivp<4>(rhs, y, x, target, config);
    x = target;
    out.push_back({y[2], y[3]});
  }
  return out;
}

SteklovEigenvalue steklov(const CatenoidGeometry& geo, int m, Parity parity,
                          const SolverConfig& config) {
  check_mode(geo.n, m);
  SteklovEigenvalue ev{geo.n, m, parity, 0.0};
  if (m == 0 && parity == Parity::even) {
    ev.lambda = -std::numeric_limits<double>::infinity();
    return ev;
  }
  const ModeSolution sol = jacobi_mode_solution(geo, m, parity, config);
  if (!(sol.phi_W > 0.0) || sol.sign_change) {
    std::ostringstream os;
    os << "steklov: mode (n=" << geo.n << ", m=" << m << ", " << to_string(parity)
       << ") lost positivity on (0, W]; integrator trouble";
    throw std::runtime_error(os.str());
  }
  ev.lambda = geo.W * sol.phiX_W / sol.phi_W;
  return ev;
}

SteklovEigenvalue steklov(int n, int m, Parity parity, const SolverConfig& config) {
  return steklov(geometry::solve_geometry(n, config), m, parity, config);
}

std::string_view to_string(ClosedForm tag) {
  switch (tag) {
    case ClosedForm::even0: return "even0";
    case ClosedForm::odd0: return "odd0";
    case ClosedForm::even1: return "even1";
    case ClosedForm::odd1: return "odd1";
    case ClosedForm::even_nm1: return "even_nm1";
    case ClosedForm::even_n: return "even_n";
    case ClosedForm::odd_2nm2: return "odd_2nm2";
    case ClosedForm::odd_2nm1: return "odd_2nm1";
  }
  throw std::invalid_argument("unknown closed-form tag");
}

ClosedForm parse_closed_form(std::string_view text) {
  for (ClosedForm tag : kAllClosedForms)
    if (to_string(tag) == text) return tag;
  throw std::invalid_argument("unknown closed-form tag '" + std::string(text) + "'");
}

int closed_form_mode(int n, ClosedForm tag) {
  switch (tag) {
    case ClosedForm::even0:
    case ClosedForm::odd0: return 0;
    case ClosedForm::even1:
    case ClosedForm::odd1: return 1;
    case ClosedForm::even_nm1: return n - 1;
    case ClosedForm::even_n: return n;
    case ClosedForm::odd_2nm2: return 2 * n - 2;
    case ClosedForm::odd_2nm1: return 2 * n - 1;
  }
  throw std::invalid_argument("unknown closed-form tag");
}

Parity closed_form_parity(ClosedForm tag) {
  switch (tag) {
    case ClosedForm::even0:
    case ClosedForm::even1:
    case ClosedForm::even_nm1:
    case ClosedForm::even_n: return Parity::even;
    default: return Parity::odd;
  }
}

double closed_form_field(int n, ClosedForm tag, const geometry::ProfilePoint& p) {
  const double nn = n;
  const double x = p.x, f = p.f, fx = p.f_x;
  switch (tag) {
    case ClosedForm::even0: return -x * fx * std::pow(f, 1.0 - nn) + std::pow(f, 2.0 - nn);
    case ClosedForm::odd0: return fx * std::pow(f, 1.0 - nn) / (nn - 1.0);
    case ClosedForm::even1: return std::pow(f, 1.0 - nn);
    case ClosedForm::odd1: return (fx * std::pow(f, 2.0 - nn) + x * std::pow(f, 1.0 - nn)) / nn;
    case ClosedForm::even_nm1:
      return ((nn - 2.0) * std::pow(f, nn - 1.0) + std::pow(f, 1.0 - nn)) / (nn - 1.0);
    case ClosedForm::even_n: return std::pow(f, nn);
    case ClosedForm::odd_2nm2:
      return (3.0 * nn - 4.0) * fx * std::pow(f, nn - 1.0) + fx * std::pow(f, 1.0 - nn);
    case ClosedForm::odd_2nm1: return fx * std::pow(f, nn);
  }
  throw std::invalid_argument("unknown closed-form tag");
}

double closed_form_field(int n, ClosedForm tag, double x, const SolverConfig& config) {
  return closed_form_field(n, tag, geometry::profile(n, x, config));
}

double closed_form_normalization(int n, ClosedForm tag) {
  // At x = 0: f = 1, f_x = 0, f_xx = n - 1, so d/dx (f_x f^p) = n - 1.
  const double nn = n;
  switch (tag) {
    case ClosedForm::even0:
    case ClosedForm::even1:
    case ClosedForm::even_nm1:
    case ClosedForm::even_n: return 1.0;
    case ClosedForm::odd0: return 1.0;
    case ClosedForm::odd1: return 1.0;
    case ClosedForm::odd_2nm2: return 3.0 * (nn - 1.0) * (nn - 1.0);
    case ClosedForm::odd_2nm1: return nn - 1.0;
  }
  throw std::invalid_argument("unknown closed-form tag");
}

}  // namespace catenoid::spectrum

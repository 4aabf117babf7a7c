#include <doctest.h>

#include <cmath>
#include <vector>

#include "catenoid/spectrum.hpp"
#include "reference_tables.hpp"

using namespace catenoid;
using namespace catenoid::spectrum;

namespace {

std::vector<double> grid(double W, int points = 20) {
  std::vector<double> xs;
  for (int k = 1; k <= points; ++k) xs.push_back(W * k / points);
  return xs;
}

// Variant φ_xx coefficient with n(n-1) multiplied by f^2 instead of 1/f^2 on the curvature term:
// (m(m+n-2)(1+f_x^2) - n(n-1) f^2) φ.
struct VariantRhs {
  double n, m;
  kernels::State<4> operator()(double, const kernels::State<4>& y) const {
    const double g = 1.0 + y[1] * y[1];
    return {y[1], (n - 1.0) * g / y[0], y[3], (m * (m + n - 2.0) * g - n * (n - 1.0) * y[0] * y[0]) * y[2]};
  }
};

}  // namespace

TEST_CASE("parity and tag parsing") {
  CHECK(parse_parity("even") == Parity::even);
  CHECK(parse_parity("1") == Parity::odd);
  CHECK_THROWS_AS(parse_parity("sideways"), std::invalid_argument);
  for (auto tag : kAllClosedForms) CHECK(parse_closed_form(to_string(tag)) == tag);
  CHECK_THROWS_AS(parse_closed_form("even7"), std::invalid_argument);
}

TEST_CASE("closed forms at the neck") {
  for (int n : {2, 5, 9}) {
    const auto neck = geometry::ProfilePoint{0.0, 1.0, 0.0};
    CHECK(closed_form_field(n, ClosedForm::even1, neck) == 1.0);
    CHECK(closed_form_field(n, ClosedForm::odd0, neck) == 0.0);
    CHECK(closed_form_field(n, ClosedForm::even_n, neck) == 1.0);
  }
}

TEST_CASE("even_n field at W for n = 3 is H^3") {
  const auto g = geometry::solve_geometry(3);
  const double v = closed_form_field(3, ClosedForm::even_n, g.W);
  CHECK(v == doctest::Approx(std::pow(g.H, 3)).epsilon(1e-10));
  CHECK(std::abs(v - std::pow(1.60312, 3)) < 1e-4);
}

TEST_CASE("oracle equivalence: IVP solutions match the explicit Jacobi fields") {
  for (int n = 2; n <= 12; ++n) {
    const auto g = geometry::solve_geometry(n);
    const auto xs = grid(g.W);
    for (auto tag : kAllClosedForms) {
      CAPTURE(n);
      CAPTURE(to_string(tag));
      const int m = closed_form_mode(n, tag);
      const auto values = jacobi_mode_values(n, m, closed_form_parity(tag), xs);
      const double norm = closed_form_normalization(n, tag);
      double scale = 0.0, worst = 0.0;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const double exact = closed_form_field(n, tag, xs[k]) / norm;
        scale = std::max(scale, std::abs(exact));
        worst = std::max(worst, std::abs(values[k][0] - exact));
      }
      CHECK(worst <= 1e-8 * scale);
    }
  }
}

TEST_CASE("the variant phi_xx coefficient does not reproduce the explicit fields") {
  const int n = 4;
  const auto g = geometry::solve_geometry(n);
  const auto y = kernels::integrate_ivp<4>(VariantRhs{double(n), double(n)}, {1.0, 0.0, 1.0, 0.0},
                                           0.0, g.W, kernels::SolverConfig{});
  CHECK(std::abs(y[2] - std::pow(g.H, n)) > 1e-3);
  const auto derived = jacobi_mode_solution(g, n, Parity::even);
  CHECK(derived.phi_W == doctest::Approx(std::pow(g.H, n)).epsilon(1e-9));
}

TEST_CASE("mode solution terminal data") {
  const auto g = geometry::solve_geometry(6);
  const auto zero = jacobi_mode_solution(g, 0, Parity::even);
  CHECK(std::abs(zero.phi_W) <= 1e-8);
  const auto one = jacobi_mode_solution(g, 1, Parity::even);
  CHECK(one.phi_W == doctest::Approx(std::pow(g.H, 1.0 - 6)).epsilon(1e-9));
  CHECK_FALSE(one.sign_change);
  CHECK_THROWS_AS(jacobi_mode_solution(g, -1, Parity::even), std::domain_error);
}

TEST_CASE("Steklov spot values") {
  CHECK(std::abs(steklov(2, 2, Parity::even).lambda - 2.00000) < 1e-5);
  CHECK(std::abs(steklov(11, 3, Parity::even).lambda - 1.02647) < 1e-5);
  CHECK(std::abs(steklov(20, 10, Parity::even).lambda - 9.66755) < 1e-5);
  CHECK(std::abs(steklov(91, 8, Parity::even).lambda - 0.99545) < 1e-5);
  CHECK(steklov(5, 0, Parity::even).lambda == -INFINITY);
}

TEST_CASE("eigenvalue identities and orderings for n <= 20, m <= 2n") {
  for (int n = 2; n <= 20; ++n) {
    CAPTURE(n);
    const auto g = geometry::solve_geometry(n);
    CHECK(std::abs(steklov(g, n, Parity::even).lambda - n) <= 1e-8);
    CHECK(std::abs(steklov(g, 1, Parity::odd).lambda - 1.0) <= 1e-8);
    double prev_even = -INFINITY, prev_odd = -INFINITY;
    for (int m = 0; m <= 2 * n; ++m) {
      CAPTURE(m);
      const double even = steklov(g, m, Parity::even).lambda;
      const auto odd_sol = jacobi_mode_solution(g, m, Parity::odd);
      CHECK_FALSE(odd_sol.sign_change);
      const double odd = g.W * odd_sol.phiX_W / odd_sol.phi_W;
      if (m >= 1) CHECK(even > prev_even);
      CHECK(odd > prev_odd);
      if (m >= 1) CHECK(odd > even);
      prev_even = even;
      prev_odd = odd;
    }
  }
}

TEST_CASE("growth is renormalised without changing the eigenvalue") {
  const int n = 3, m = 600;
  const auto g = geometry::solve_geometry(n);
  const auto sol = jacobi_mode_solution(g, m, Parity::even);
  CHECK(sol.log_scale > 0.0);
  CHECK(std::isfinite(sol.phi_W));
  const double lambda = g.W * sol.phiX_W / sol.phi_W;
  // Independent route: Riccati equation for σ = φ_x/φ, σ(0) = 0.
  auto riccati = [](double, const kernels::State<3>& y) {
    const double gx = 1.0 + y[1] * y[1];
    const double c = (double(m) * (m + n - 2.0) * gx - n * (n - 1.0)) / (y[0] * y[0]);
    return kernels::State<3>{y[1], (n - 1.0) * gx / y[0], c - y[2] * y[2]};
  };
  const auto y = kernels::integrate_ivp<3>(riccati, {1.0, 0.0, 0.0}, 0.0, g.W, kernels::SolverConfig{});
  CHECK(lambda == doctest::Approx(g.W * y[2]).epsilon(1e-9));
}

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "catenoid/geometry.hpp"

namespace catenoid::spectrum {

using geometry::CatenoidGeometry;
using kernels::SolverConfig;

/// Even modes start from (φ, φ_x) = (1, 0), odd modes from (0, 1).
enum class Parity { even = 0, odd = 1 };

std::string_view to_string(Parity p);
Parity parse_parity(std::string_view text);

/// Terminal data of one Jacobi-mode solution at the free boundary x = W.
/// φ is stored as phi_W * exp(log_scale) when the solution had to be
/// renormalised during integration; the ratio phiX_W / phi_W is unaffected.
struct ModeSolution {
  int n = 0;
  int m = 0;
  Parity parity = Parity::even;
  double phi_W = 0.0;
  double phiX_W = 0.0;
  double log_scale = 0.0;
  /// Set if the integrated φ was observed <= 0 somewhere in (0, W).
  bool sign_change = false;
};

struct SteklovEigenvalue {
  int n = 0;
  int m = 0;
  Parity parity = Parity::even;
  double lambda = 0.0;  // -inf for (m, parity) = (0, even)
};

/// Coupled system on (f, f_x, φ, φ_x):
///   f_xx = (n-1)(1+f_x^2)/f,
///   φ_xx = [m(m+n-2)(1+f_x^2) - n(n-1)] φ / f^2.
struct ModeRhs {
  double n;
  double m;
  kernels::State<4> operator()(double, const kernels::State<4>& y) const {
    const double g = 1.0 + y[1] * y[1];
    const double inv_f = 1.0 / y[0];
    return {y[1], (n - 1.0) * g * inv_f, y[3],
            (m * (m + n - 2.0) * g - n * (n - 1.0)) * inv_f * inv_f * y[2]};
  }
};

ModeSolution jacobi_mode_solution(const CatenoidGeometry& geo, int m, Parity parity,
                                  const SolverConfig& config = {});
ModeSolution jacobi_mode_solution(int n, int m, Parity parity, const SolverConfig& config = {});

/// (φ, φ_x) at each abscissa in `xs` (ascending, within [0, W]), with the
/// initial normalisation of the mode and no renormalisation.
std::vector<std::array<double, 2>> jacobi_mode_values(int n, int m, Parity parity,
                                                      std::span<const double> xs,
                                                      const SolverConfig& config = {});

/// Λ = W φ_x(W)/φ(W); Λ_0(n, 0) is -inf by convention.
SteklovEigenvalue steklov(const CatenoidGeometry& geo, int m, Parity parity,
                          const SolverConfig& config = {});
SteklovEigenvalue steklov(int n, int m, Parity parity, const SolverConfig& config = {});

/// Explicit Jacobi fields coming from ambient Killing fields and from the
/// algebra of J(n, m) acting on powers of f.
enum class ClosedForm { even0, odd0, even1, odd1, even_nm1, even_n, odd_2nm2, odd_2nm1 };

inline constexpr ClosedForm kAllClosedForms[] = {
    ClosedForm::even0,  ClosedForm::odd0,   ClosedForm::even1,    ClosedForm::odd1,
    ClosedForm::even_nm1, ClosedForm::even_n, ClosedForm::odd_2nm2, ClosedForm::odd_2nm1};

std::string_view to_string(ClosedForm tag);
ClosedForm parse_closed_form(std::string_view text);

/// Harmonic mode and parity that a closed-form field belongs to.
int closed_form_mode(int n, ClosedForm tag);
Parity closed_form_parity(ClosedForm tag);

/// The field itself, evaluated from a profile point (x, f, f_x).
double closed_form_field(int n, ClosedForm tag, const geometry::ProfilePoint& p);
double closed_form_field(int n, ClosedForm tag, double x, const SolverConfig& config = {});

/// φ(0) for even tags, φ_x(0) for odd tags: divide by this to match the
/// initial conditions of jacobi_mode_solution.
double closed_form_normalization(int n, ClosedForm tag);

}  // namespace catenoid::spectrum

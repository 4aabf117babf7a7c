#pragma once

#include <optional>

#include "catenoid/geometry.hpp"
#include "catenoid/kernels/special.hpp"

namespace catenoid::index {

using geometry::CatenoidGeometry;
using kernels::BigInt;
using kernels::SolverConfig;

/// Dimension of degree-m spherical harmonics on S^{n-1}:
/// C(n+m-1, n-1) - C(n+m-3, n-1).
BigInt harmonic_dim(int n, int m);

/// Number of even harmonic modes with Λ_0(n, m) < 1, counting m = 0 (Λ = -inf).
struct EvenModeCount {
  int n = 0;
  int K0 = 0;
  double lambda_below = 0.0;  // Λ_0(n, K0-1)
  double lambda_above = 0.0;  // Λ_0(n, K0)
  double margin = 0.0;        // min(1 - lambda_below, lambda_above - 1)
  double error_estimate = 0.0;
  bool certified = false;
};

/// Certification requires margin > kCertificationFactor * error_estimate, the
/// error being estimated by re-solving at halved tolerances.
inline constexpr double kCertificationFactor = 1e3;

EvenModeCount count_even_modes(const CatenoidGeometry& geo, const SolverConfig& config = {});
EvenModeCount count_even_modes(int n, const SolverConfig& config = {});

/// Odd-mode count. Λ_1(n, 1) = 1 exactly and Λ_1 increases with m, so only
/// m = 0 lies below 1.
inline constexpr int kOddModeCount = 1;

struct OddModeCheck {
  double lambda_odd0 = 0.0;
  double lambda_odd1 = 0.0;
  int K1 = 0;  // 1 when lambda_odd0 < 1 <= lambda_odd1 within tolerance
};

/// Diagnostic recomputation of Λ_1(n, 0) and Λ_1(n, 1).
OddModeCheck check_odd_modes(const CatenoidGeometry& geo, const SolverConfig& config = {},
                             double tolerance = 1e-8);

/// SI = Σ_{m=1}^{K0-1} Dim H(n, m) + Σ_{m=0}^{K1-1} Dim H(n, m).
BigInt steklov_index_from_counts(int n, int K0, int K1 = kOddModeCount);

/// MI = 1 + C(n+k-2, k-1) + C(n+k-3, k-2) with k = K0 (telescoped form).
BigInt morse_index_closed_form(int n, int K0);

/// ln MI from K0 via log-binomials, usable for any n.
double log_morse_index_from_count(int n, int K0);

BigInt steklov_index(int n, const SolverConfig& config = {});
/// MI = SI + 1, cross-checked against the closed form; throws on mismatch.
BigInt morse_index(int n, const SolverConfig& config = {});
double log_morse_index(int n, const SolverConfig& config = {});

/// Largest n for which the report carries exact SI/MI integers.
inline constexpr int kExactIndexLimit = 5000;

struct IndexReport {
  int n = 0;
  int K0 = 0;
  int K1 = kOddModeCount;
  std::optional<BigInt> SI;
  std::optional<BigInt> MI;
  double logMI = 0.0;
  double margin = 0.0;
  double error_estimate = 0.0;
  bool certified = false;
};

IndexReport index_report(const CatenoidGeometry& geo, const SolverConfig& config = {},
                         bool log_only = false);
IndexReport index_report(int n, const SolverConfig& config = {}, bool log_only = false);

}  // namespace catenoid::index

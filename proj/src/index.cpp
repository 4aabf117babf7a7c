#include "catenoid/index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "catenoid/spectrum.hpp"

namespace catenoid::index {

using spectrum::Parity;

BigInt harmonic_dim(int n, int m) {
  if (n < 2 || m < 0) throw std::domain_error("harmonic_dim: need n >= 2, m >= 0");
  return kernels::binomial_exact(n + m - 1, n - 1) - kernels::binomial_exact(n + m - 3, n - 1);
}

EvenModeCount count_even_modes(const CatenoidGeometry& geo, const SolverConfig& config) {
  EvenModeCount count;
  count.n = geo.n;
  count.lambda_below = -std::numeric_limits<double>::infinity();
  int m = 1;
  for (;; ++m) {
    const double lambda = spectrum::steklov(geo, m, Parity::even, config).lambda;
    if (lambda >= 1.0) {
      count.lambda_above = lambda;
      break;
    }
    count.lambda_below = lambda;
    if (m > geo.n) throw std::runtime_error("count_even_modes: Λ_0(n, n) = n was not reached");
  }
  count.K0 = m;  // modes 0..m-1 lie below 1
  count.margin = std::min(1.0 - count.lambda_below, count.lambda_above - 1.0);

  // Error estimate: the two eigenvalues bracketing 1, re-solved end to end at
  // halved tolerances.
  const SolverConfig fine = config.halved();
  const auto fine_geo = geometry::solve_geometry(geo.n, fine);
  const double below = spectrum::steklov(fine_geo, count.K0 - 1, Parity::even, fine).lambda;
  const double above = spectrum::steklov(fine_geo, count.K0, Parity::even, fine).lambda;
  const double floor = std::numeric_limits<double>::epsilon() *
                       std::max({1.0, std::abs(count.lambda_below), std::abs(count.lambda_above)});
  count.error_estimate = std::max({std::abs(below - count.lambda_below),
                                   std::abs(above - count.lambda_above), floor});
  const bool same_side = (below < 1.0) && (above >= 1.0);
  count.certified = same_side && count.margin > kCertificationFactor * count.error_estimate;
  return count;
}

EvenModeCount count_even_modes(int n, const SolverConfig& config) {
  return count_even_modes(geometry::solve_geometry(n, config), config);
}

OddModeCheck check_odd_modes(const CatenoidGeometry& geo, const SolverConfig& config,
                             double tolerance) {
  OddModeCheck check;
  check.lambda_odd0 = spectrum::steklov(geo, 0, Parity::odd, config).lambda;
  check.lambda_odd1 = spectrum::steklov(geo, 1, Parity::odd, config).lambda;
  const bool odd0_below = check.lambda_odd0 < 1.0;
  const bool odd1_at_one = std::abs(check.lambda_odd1 - 1.0) <= tolerance;
  check.K1 = (odd0_below && odd1_at_one) ? 1 : -1;
  return check;
}

BigInt steklov_index_from_counts(int n, int K0, int K1) {
  BigInt si = 0;
  for (int m = 1; m < K0; ++m) si += harmonic_dim(n, m);
  for (int m = 0; m < K1; ++m) si += harmonic_dim(n, m);
  return si;
}

BigInt morse_index_closed_form(int n, int K0) {
  return 1 + kernels::binomial_exact(n + K0 - 2, K0 - 1) +
         kernels::binomial_exact(n + K0 - 3, K0 - 2);
}

double log_morse_index_from_count(int n, int K0) {
  const double a = kernels::log_binomial(n + K0 - 2.0, K0 - 1.0);
  const double b = kernels::log_binomial(n + K0 - 3.0, K0 - 2.0);
  return kernels::log_add(0.0, kernels::log_add(a, b));
}

BigInt steklov_index(int n, const SolverConfig& config) {
  return steklov_index_from_counts(n, count_even_modes(n, config).K0);
}

BigInt morse_index(int n, const SolverConfig& config) {
  const int K0 = count_even_modes(n, config).K0;
  const BigInt mi = steklov_index_from_counts(n, K0) + 1;
  const BigInt closed = morse_index_closed_form(n, K0);
  if (mi != closed) {
    std::ostringstream os;
    os << "morse_index: SI + 1 = " << mi << " but closed form gives " << closed << " at n = " << n;
    throw std::logic_error(os.str());
  }
  return mi;
}

double log_morse_index(int n, const SolverConfig& config) {
  return log_morse_index_from_count(n, count_even_modes(n, config).K0);
}

IndexReport index_report(const CatenoidGeometry& geo, const SolverConfig& config, bool log_only) {
  const EvenModeCount count = count_even_modes(geo, config);
  IndexReport report;
  report.n = geo.n;
  report.K0 = count.K0;
  report.margin = count.margin;
  report.error_estimate = count.error_estimate;
  report.certified = count.certified;
  if (!log_only && geo.n <= kExactIndexLimit) {
    report.SI = steklov_index_from_counts(geo.n, count.K0);
    report.MI = *report.SI + 1;
    const BigInt closed = morse_index_closed_form(geo.n, count.K0);
    if (*report.MI != closed)
      throw std::logic_error("index_report: SI + 1 disagrees with the closed form");
    report.logMI = kernels::log_of(*report.MI);
  } else {
    report.logMI = log_morse_index_from_count(geo.n, count.K0);
  }
  return report;
}

IndexReport index_report(int n, const SolverConfig& config, bool log_only) {
  return index_report(geometry::solve_geometry(n, config), config, log_only);
}

}  // namespace catenoid::index

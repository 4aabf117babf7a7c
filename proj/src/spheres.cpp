#include "catenoid/spheres.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "catenoid/index.hpp"

namespace catenoid::spheres {

namespace {

void check(int p, int q, int i, int j) {
  if (p < 1 || q < 1) throw std::domain_error("spheres: p, q must be >= 1");
  if (i < 0 || j < 0) throw std::domain_error("spheres: i, j must be >= 0");
}

// Negative modes on a boundary row: k(k + d - 1) < 2d, k >= 0.
int row_negative_count(int d) {
  const double root = 0.5 * (1.0 - d + std::sqrt(double(d) * d + 6.0 * d + 1.0));
  long k = static_cast<long>(std::ceil(root));
  while (k > 0 && k * (k + d - 1) >= 2L * d) --k;
  while (k * (k + d - 1) < 2L * d) ++k;
  return static_cast<int>(k);  // k = number of non-negative integers below the root
}

}  // namespace

double sphere_mode_eigenvalue(int p, int q, int i, int j) {
  check(p, q, i, j);
  const long long pp = p, qq = q, ii = i, jj = j;
  const long long numerator =
      (pp + qq) * (ii * qq * (ii + pp - 1) + jj * pp * (jj + qq - 1)) - 2 * (pp + qq) * pp * qq;
  return static_cast<double>(numerator) / static_cast<double>(pp * qq);
}

BigInt sphere_mode_degeneracy(int p, int q, int i, int j) {
  check(p, q, i, j);
  return index::harmonic_dim(p + 1, i) * index::harmonic_dim(q + 1, j);
}

std::vector<SphereProductMode> enumerate_modes(int p, int q, int max_order) {
  std::vector<SphereProductMode> modes;
  for (int i = 0; i <= max_order; ++i)
    for (int j = 0; i + j <= max_order; ++j)
      modes.push_back({p, q, i, j, sphere_mode_eigenvalue(p, q, i, j),
                       sphere_mode_degeneracy(p, q, i, j)});
  return modes;
}

int default_scan_order(int p, int q) { return 2 * std::max(p, q) + 2; }

BigInt sphere_morse_index(int p, int q) {
  BigInt total = 0;
  for (const auto& mode : enumerate_modes(p, q, default_scan_order(p, q)))
    if (mode.eigenvalue < 0.0) total += mode.degeneracy;
  return total;
}

BigInt sphere_morse_index_by_rows(int p, int q) {
  check(p, q, 0, 0);
  BigInt total = 0;
  const int along_p = row_negative_count(p);
  const int along_q = row_negative_count(q);
  for (int i = 0; i < along_p; ++i) total += sphere_mode_degeneracy(p, q, i, 0);
  for (int j = 1; j < along_q; ++j) total += sphere_mode_degeneracy(p, q, 0, j);
  return total;
}

}  // namespace catenoid::spheres

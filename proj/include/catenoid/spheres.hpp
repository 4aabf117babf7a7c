#pragma once

#include <vector>

#include "catenoid/kernels/special.hpp"

namespace catenoid::spheres {

using kernels::BigInt;

/// One (i, j) harmonic mode of the Jacobi operator on the minimal product
/// S^p(r) x S^q(s) in the unit sphere.
struct SphereProductMode {
  int p = 0;
  int q = 0;
  int i = 0;
  int j = 0;
  double eigenvalue = 0.0;
  BigInt degeneracy;
};

/// ((p+q)/pq)(i q (i+p-1) + j p (j+q-1)) - 2(p+q). Exact zero at i = j = 1.
double sphere_mode_eigenvalue(int p, int q, int i, int j);

/// Dim H(p+1, i) * Dim H(q+1, j).
BigInt sphere_mode_degeneracy(int p, int q, int i, int j);

/// Every mode with i + j <= max_order.
std::vector<SphereProductMode> enumerate_modes(int p, int q, int max_order);

/// Default enumeration bound 2 max(p, q) + 2.
int default_scan_order(int p, int q);

/// Degeneracy-weighted count of negative modes by enumeration.
BigInt sphere_morse_index(int p, int q);

/// Same count from the two boundary rows (i = 0 or j = 0), whose negative
/// modes are found by solving i^2 + (p-1) i - 2p < 0 (resp. in j, with q).
/// Interior modes (i, j >= 1) are bounded below by J_{1,1} = 0.
BigInt sphere_morse_index_by_rows(int p, int q);

}  // namespace catenoid::spheres

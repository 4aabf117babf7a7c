#include <doctest.h>

#include "catenoid/index.hpp"
#include "catenoid/spheres.hpp"

using namespace catenoid::spheres;

TEST_CASE("mode eigenvalue formula") {
  for (int p = 1; p <= 12; ++p)
    for (int q = p; q <= 12; ++q) {
      CHECK(sphere_mode_eigenvalue(p, q, 1, 1) == 0.0);
      CHECK(sphere_mode_eigenvalue(p, q, 0, 0) == -2.0 * (p + q));
    }
  CHECK(sphere_mode_eigenvalue(1, 1, 2, 0) == 4.0);
  CHECK(sphere_mode_eigenvalue(2, 5, 2, 0) >= 0.0);
  CHECK_THROWS_AS(sphere_mode_eigenvalue(0, 1, 0, 0), std::domain_error);
}

TEST_CASE("negative modes are exactly (0,0), (1,0), (0,1)") {
  for (int p = 1; p <= 12; ++p)
    for (int q = p; q <= 12; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      int negatives = 0;
      for (const auto& mode : enumerate_modes(p, q, default_scan_order(p, q))) {
        if (mode.eigenvalue >= 0.0) continue;
        ++negatives;
        const bool listed = (mode.i == 0 && mode.j == 0) || (mode.i == 1 && mode.j == 0) ||
                            (mode.i == 0 && mode.j == 1);
        CHECK(listed);
        if (mode.i == 1) CHECK(mode.degeneracy == p + 1);
        if (mode.j == 1) CHECK(mode.degeneracy == q + 1);
        if (mode.i == 0 && mode.j == 0) CHECK(mode.degeneracy == 1);
      }
      CHECK(negatives == 3);
    }
}

TEST_CASE("monotone in each harmonic order") {
  for (int p = 1; p <= 12; ++p)
    for (int q = p; q <= 12; ++q) {
      const int bound = default_scan_order(p, q);
      for (int i = 0; i < bound; ++i)
        for (int j = 0; i + j + 2 <= bound; ++j) {
          const double base = sphere_mode_eigenvalue(p, q, i, j);
          CHECK(sphere_mode_eigenvalue(p, q, i + 1, j) >= base);
          CHECK(sphere_mode_eigenvalue(p, q, i, j + 1) >= base);
          CHECK(sphere_mode_eigenvalue(p, q, i + 1, j + 1) > base);
        }
    }
}

TEST_CASE("Morse index p + q + 3 by enumeration and by rows") {
  CHECK(sphere_morse_index(1, 1) == 5);
  CHECK(sphere_morse_index(2, 3) == 8);
  for (int p = 1; p <= 12; ++p)
    for (int q = p; q <= 12; ++q) {
      CHECK(sphere_morse_index(p, q) == p + q + 3);
      CHECK(sphere_morse_index_by_rows(p, q) == p + q + 3);
    }
}

TEST_CASE("degeneracy is a product of sphere harmonic dimensions") {
  CHECK(sphere_mode_degeneracy(2, 3, 2, 1) ==
        catenoid::index::harmonic_dim(3, 2) * catenoid::index::harmonic_dim(4, 1));
  CHECK(sphere_mode_degeneracy(2, 3, 2, 1) == 5 * 4);
}

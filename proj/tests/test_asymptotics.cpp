#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "catenoid/asymptotics.hpp"
#include "catenoid/geometry.hpp"

using namespace catenoid;
using namespace catenoid::asymptotics;

TEST_CASE("predicted geometry at n = 100") {
  const auto p = predicted_geometry(198.0);
  const double L = (M_PI / 198.0) * (1.0 + kKappa / 198.0);
  CHECK(p.L_bar == doctest::Approx(L).epsilon(1e-15));
  CHECK(p.W_bar == doctest::Approx(L * (1.0 - 2.0 / 198.0)).epsilon(1e-15));
  CHECK(p.W_bar == doctest::Approx(0.0158).epsilon(1e-2));
  CHECK(p.H_bar == doctest::Approx(1.043).epsilon(2e-3));
}

TEST_CASE("predicted eigenvalues and counts") {
  CHECK(predicted_lambda(100, 10) == 0.0);
  CHECK(predicted_lambda(4, 1) == -3.0);
  CHECK(predicted_lambda(12, 3) == -1.0);
  const auto c = predicted_counts(100);
  CHECK(c.K_bar == 10.0);
  CHECK(c.logMI_bar == doctest::Approx(10.0 * std::log(10.0) + 10.0).epsilon(1e-15));
  const auto pred = predict(100, 10);
  REQUIRE(pred.lambda_bar);
  CHECK(*pred.lambda_bar == 0.0);
  CHECK(pred.alpha == 198.0);
  CHECK_FALSE(predict(100).lambda_bar);
}

TEST_CASE("c ratio approaches one") {
  CHECK(c_ratio(50.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  double worst50 = 0.0;
  for (int k = 0; k <= 19; ++k) {
    const double x = k / 20.0;
    const double r = c_ratio(50.0, x);
    CHECK(std::abs(r - 1.0) <= 10.0 / 50.0);
    worst50 = std::max(worst50, 50.0 * std::abs(r - 1.0));
  }
  const double A = 2.0 * worst50;
  for (double alpha : {100.0, 200.0, 400.0, 1000.0})
    for (int k = -19; k <= 19; ++k) {
      const double x = k / 20.0;
      CHECK(std::abs(c_ratio(alpha, x) - 1.0) <= A / alpha);
    }
  CHECK(c_ratio(50.0, 0.3) == doctest::Approx(c_ratio(50.0, -0.3)).epsilon(1e-12));
}

TEST_CASE("geometry deviation stays bounded") {
  std::vector<int> ns;
  for (int a = 20; a <= 400; a += 20) ns.push_back(a / 2 + 1);
  const auto rep = deviation_report(DeviationKind::geometry, ns, {});
  REQUIRE(rep.rows.size() == ns.size());
  for (const auto& row : rep.rows) {
    CAPTURE(row.n);
    CHECK(std::abs(row.scaled_error) < 1.0);
    CHECK(row.computed > 0.0);
  }
}

TEST_CASE("eigenvalue deviation bounded for fixed m") {
  const auto ns = log_spaced(200, 10000, 6);
  const std::vector<int> ms{10};
  const auto rep = deviation_report(DeviationKind::lambda, ns, ms);
  REQUIRE(rep.rows.size() == ns.size());
  for (const auto& row : rep.rows) {
    CAPTURE(row.n);
    CHECK(std::isfinite(row.scaled_error));
    CHECK(std::abs(row.scaled_error) < 3.0);
  }
}

TEST_CASE("spike flags where the prediction crosses zero") {
  const std::vector<int> ns{99, 100, 101, 150};
  const std::vector<int> ms{10};
  const auto rep = deviation_report(DeviationKind::lambda, ns, ms);
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.rows[0].spike);
  CHECK(rep.rows[1].spike);
  CHECK_FALSE(rep.rows[1].ratio_error);
  CHECK(rep.rows[2].spike);
  CHECK_FALSE(rep.rows[3].spike);
  CHECK(rep.rows[3].ratio_error);
  for (const auto& row : rep.rows) CHECK(std::isfinite(row.scaled_error));
}

TEST_CASE("rows come back ordered regardless of thread count") {
  const std::vector<int> ns{30, 10, 20};
  const std::vector<int> ms{3, 2};
  const auto one = deviation_report(DeviationKind::lambda, ns, ms, {}, 1);
  const auto many = deviation_report(DeviationKind::lambda, ns, ms, {}, 4);
  REQUIRE(one.rows.size() == 6);
  CHECK(one.rows == many.rows);
  CHECK(std::is_sorted(one.rows.begin(), one.rows.end(), [](const auto& a, const auto& b) {
    return a.n != b.n ? a.n < b.n : *a.m < *b.m;
  }));
}

TEST_CASE("deviation kinds parse") {
  for (auto k : {DeviationKind::lambda, DeviationKind::K0, DeviationKind::logMI, DeviationKind::geometry})
    CHECK(parse_deviation_kind(to_string(k)) == k);
  CHECK_THROWS(parse_deviation_kind("bogus"));
}

TEST_CASE("log spaced grid") {
  const auto g = log_spaced(10, 10000, 5);
  CHECK(g.front() == 10);
  CHECK(g.back() == 10000);
  CHECK(std::adjacent_find(g.begin(), g.end(), [](int a, int b) { return a >= b; }) == g.end());
  CHECK(g.size() >= 14);
  CHECK(g.size() <= 16);
  const auto tiny = log_spaced(2, 4, 20);
  CHECK(tiny == std::vector<int>{2, 3, 4});
}

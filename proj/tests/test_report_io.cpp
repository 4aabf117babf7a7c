#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "catenoid/report_io.hpp"

using namespace catenoid;
using namespace catenoid::io;

TEST_CASE("JSON round trips") {
  GeometryRow g{7, 0.123, 1.5, 0.2, 3.0, true, ""};
  CHECK(json(g).get<GeometryRow>() == g);

  EigenRow e{3, 4, "even", 2.5, true, ""};
  CHECK(json(e).get<EigenRow>() == e);

  IndexRow i{91, 9, 1, "170212690388", "170212690389", 25.86, 4.55e-3, 1e-11, true, true, ""};
  CHECK(json(i).get<IndexRow>() == i);
  CHECK(json(i)["MI"] == "170212690389");

  SphereRow s{2, 3, "8", "8", 8, true};
  CHECK(json(s).get<SphereRow>() == s);

  asymptotics::DeviationRow d;
  d.n = 100;
  d.m = 10;
  d.computed = 0.9;
  d.scaled_error = 0.2;
  d.scaling_label = "log n";
  d.spike = true;
  CHECK(json(d).get<asymptotics::DeviationRow>() == d);
  CHECK(json(d)["ratio_error"].is_null());
}

TEST_CASE("non-finite values carry explicit flags") {
  const double inf = std::numeric_limits<double>::infinity();
  GeometryRow g{1, 0.0, 0.0, inf, 0.0, true, ""};
  const json jg = g;
  CHECK(jg["L"].is_null());
  CHECK(jg["L_is_infinite"] == true);
  CHECK(jg.get<GeometryRow>().L == inf);

  EigenRow e{5, 0, "odd", -inf, true, ""};
  const json je = e;
  CHECK(je["lambda"].is_null());
  CHECK(je["lambda_is_minus_infinity"] == true);
  CHECK(je.get<EigenRow>().lambda == -inf);
  CHECK(json(EigenRow{5, 1, "odd", 1.0, true, ""})["lambda_is_minus_infinity"] == false);
}

TEST_CASE("half-even rounding at five decimals") {
  CHECK(round_half_even_5(1.19967864) == "1.19968");
  CHECK(round_half_even_5(0.000005) == "0.00001");
  CHECK(round_half_even_5(0.125) == "0.12500");
  CHECK(round_half_even_5(2.5e-6) == "0.00000");
  CHECK(round_half_even_5(7.5e-6) == "0.00001");
  CHECK(round_half_even_5(-1.000004) == "-1.00000");
}

TEST_CASE("number formatting") {
  const double inf = std::numeric_limits<double>::infinity();
  CsvOptions plain;
  CHECK(format_number(inf, plain) == "inf");
  CHECK(format_number(-inf, plain) == "-inf");
  CHECK(format_number(std::nan(""), plain) == "nan");
  CHECK(format_number(0.5, plain) == "0.5");
  CsvOptions t5;
  t5.table5 = true;
  CHECK(format_number(1.81017058, t5) == "1.81017");
}

TEST_CASE("CSV has one header and one line per row") {
  std::ostringstream os;
  write_csv(os, std::vector<GeometryRow>{{2, 1.0, 2.0, 3.0, 4.0, true, ""}, {3, 1.0, 2.0, 3.0, 4.0, true, ""}},
            CsvOptions{});
  const std::string text = os.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  CHECK(text.rfind("n,", 0) == 0);
}

TEST_CASE("integer list parsing") {
  CHECK(parse_int_list("7") == std::vector<int>{7});
  CHECK(parse_int_list("2..5") == std::vector<int>{2, 3, 4, 5});
  CHECK(parse_int_list("2..4,9") == std::vector<int>{2, 3, 4, 9});
  CHECK_THROWS(parse_int_list(""));
  CHECK_THROWS(parse_int_list("5..2"));
  CHECK_THROWS(parse_int_list("x"));
  CHECK_THROWS(parse_int_list("3..,4"));
}

TEST_CASE("manifest records tolerances") {
  RunManifest m;
  m.command = "geometry";
  m.version = "0.1.0";
  m.tolerances = kernels::SolverConfig::from_tolerance(1e-10);
  const json j = manifest_to_json(m);
  CHECK(j["command"] == "geometry");
  CHECK(j.dump().find("1e-10") != std::string::npos);
}

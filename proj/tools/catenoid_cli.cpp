// Command-line front end: geometry, Steklov eigenvalues, Morse index,
// asymptotic deviation data and sphere-product indices as CSV or JSON.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catenoid/asymptotics.hpp"
#include "catenoid/geometry.hpp"
#include "catenoid/index.hpp"
#include "catenoid/parallel.hpp"
#include "catenoid/report_io.hpp"
#include "catenoid/spectrum.hpp"
#include "catenoid/spheres.hpp"

#ifndef CATENOID_VERSION
#define CATENOID_VERSION "dev"
#endif

namespace {

using namespace catenoid;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitSolverFailure = 2;
constexpr int kExitUncertified = 3;

struct Options {
  std::string n = "2..100";
  std::string m = "2..10";
  std::string parity = "even";
  std::string format = "csv";
  std::string out;
  double tol = 0.0;  // 0: environment or default
  bool strict = false;
  bool table5 = false;
  bool log_only = false;
  unsigned threads = 0;
  int precision = 10;
  // asym
  std::string kind = "lambda";
  std::string grid = "auto";
  int per_decade = 40;
  // spheres
  int max = 12;
  std::string p;
  std::string q;
};

kernels::SolverConfig resolve_config(const Options& opt) {
  double tol = 1e-12;
  if (const char* env = std::getenv("CATENOID_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0))
      throw std::invalid_argument("CATENOID_TOL must be a positive number");
    tol = v;
  }
  if (opt.tol > 0.0) tol = opt.tol;
  return kernels::SolverConfig::from_tolerance(tol);
}

// Writes the data file (or stdout) and, for files, the paired manifest.
template <class Row>
void emit(const std::vector<Row>& rows, const Options& opt, io::RunManifest manifest,
          std::chrono::steady_clock::time_point start) {
  std::ostringstream data;
  if (opt.format == "json") {
    data << json(rows).dump(2) << '\n';
  } else {
    io::write_csv(data, rows, io::CsvOptions{opt.precision, opt.table5});
  }
  if (opt.out.empty()) {
    std::cout << data.str();
    return;
  }
  {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + opt.out);
    file << data.str();
  }
  manifest.version = CATENOID_VERSION;
  manifest.data_file = opt.out;
  manifest.format = opt.format;
  manifest.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ofstream mf(opt.out + ".manifest.json", std::ios::binary);
  if (!mf) throw std::runtime_error("cannot open manifest for " + opt.out);
  mf << io::manifest_to_json(manifest).dump(2) << '\n';
}

io::RunManifest base_manifest(const std::string& command, const std::vector<std::string>& args,
                              const kernels::SolverConfig& cfg) {
  io::RunManifest m;
  m.command = command;
  m.arguments = args;
  m.tolerances = cfg;
  return m;
}

int run_geometry(const Options& opt, const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  const auto cfg = resolve_config(opt);
  const auto ns = io::parse_int_list(opt.n);
  for (int n : ns)
    if (n < 2 || n > 100000) throw std::invalid_argument("--n must lie within 2..100000");
  std::vector<io::GeometryRow> rows(ns.size());
  parallel_for(ns.size(), opt.threads, [&](std::size_t i) {
    auto& row = rows[i];
    row.n = ns[i];
    try {
      const auto g = geometry::solve_geometry(ns[i], cfg);
      row.W = g.W;
      row.H = g.H;
      row.L = g.L;
      row.R = g.R;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
      row.W = row.H = row.L = row.R = std::nan("");
    }
  });
  bool failed = false;
  for (const auto& r : rows) {
    if (r.ok) continue;
    failed = true;
    std::cerr << "geometry: n = " << r.n << ": " << r.error << '\n';
    if (opt.strict) return kExitSolverFailure;
  }
  auto manifest = base_manifest("geometry", args, cfg);
  manifest.parameters = {{"n", opt.n}};
  emit(rows, opt, manifest, start);
  return failed ? kExitSolverFailure : kExitOk;
}

int run_eig(const Options& opt, const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  const auto cfg = resolve_config(opt);
  const auto ns = io::parse_int_list(opt.n);
  const auto ms = io::parse_int_list(opt.m);
  std::vector<spectrum::Parity> parities;
  if (opt.parity == "both") {
    parities = {spectrum::Parity::even, spectrum::Parity::odd};
  } else {
    parities = {spectrum::parse_parity(opt.parity)};
  }
  struct Job {
    int n, m;
    spectrum::Parity parity;
  };
  std::vector<Job> jobs;
  for (int n : ns)
    for (int m : ms)
      for (auto p : parities) jobs.push_back({n, m, p});

  geometry::GeometryCache cache(cfg);
  std::vector<io::EigenRow> rows(jobs.size());
  parallel_for(jobs.size(), opt.threads, [&](std::size_t i) {
    const Job& job = jobs[i];
    auto& row = rows[i];
    row.n = job.n;
    row.m = job.m;
    row.parity = std::string(spectrum::to_string(job.parity));
    try {
      row.lambda = spectrum::steklov(cache.get(job.n), job.m, job.parity, cfg).lambda;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
      row.lambda = std::nan("");
    }
  });
  bool failed = false;
  for (const auto& r : rows) {
    if (r.ok) continue;
    failed = true;
    std::cerr << "eig: (n, m) = (" << r.n << ", " << r.m << "): " << r.error << '\n';
    if (opt.strict) return kExitSolverFailure;
  }
  auto manifest = base_manifest("eig", args, cfg);
  manifest.parameters = {{"n", opt.n}, {"m", opt.m}, {"parity", opt.parity}};
  emit(rows, opt, manifest, start);
  return failed ? kExitSolverFailure : kExitOk;
}

int run_index(const Options& opt, const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  const auto cfg = resolve_config(opt);
  const auto ns = io::parse_int_list(opt.n);
  std::vector<io::IndexRow> rows(ns.size());
  parallel_for(ns.size(), opt.threads, [&](std::size_t i) {
    auto& row = rows[i];
    row.n = ns[i];
    try {
      const auto rep = index::index_report(ns[i], cfg, opt.log_only);
      row.K0 = rep.K0;
      row.K1 = rep.K1;
      row.SI = rep.SI ? rep.SI->str() : "";
      row.MI = rep.MI ? rep.MI->str() : "";
      row.logMI = rep.logMI;
      row.margin = rep.margin;
      row.error_estimate = rep.error_estimate;
      row.certified = rep.certified;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
      row.logMI = row.margin = row.error_estimate = std::nan("");
    }
  });
  bool failed = false, uncertified = false;
  for (const auto& r : rows) {
    if (!r.ok) {
      failed = true;
      std::cerr << "index: n = " << r.n << ": " << r.error << '\n';
      if (opt.strict) return kExitSolverFailure;
    } else if (!r.certified) {
      uncertified = true;
      std::cerr << "index: n = " << r.n << " is not certified (margin " << r.margin
                << ", error estimate " << r.error_estimate << ")\n";
    }
  }
  auto manifest = base_manifest("index", args, cfg);
  manifest.parameters = {{"n", opt.n}, {"log_only", opt.log_only}};
  for (const auto& r : rows) manifest.certified.push_back(r.certified);
  emit(rows, opt, manifest, start);
  if (failed) return kExitSolverFailure;
  if (uncertified && opt.strict) return kExitUncertified;
  return kExitOk;
}

std::vector<int> asym_grid(const Options& opt) {
  const auto listed = io::parse_int_list(opt.n);
  const bool single_range = opt.n.find(',') == std::string::npos &&
                            opt.n.find("..") != std::string::npos;
  bool use_log = opt.grid == "log";
  if (opt.grid == "auto") use_log = single_range && listed.back() > 10 * listed.front();
  if (opt.grid != "auto" && opt.grid != "log" && opt.grid != "linear")
    throw std::invalid_argument("--grid must be auto, linear or log");
  if (!use_log) return listed;
  return asymptotics::log_spaced(listed.front(), listed.back(), opt.per_decade);
}

int run_asym(const Options& opt, const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  const auto cfg = resolve_config(opt);
  const auto kind = asymptotics::parse_deviation_kind(opt.kind);
  const auto ns = asym_grid(opt);
  const auto ms = kind == asymptotics::DeviationKind::lambda ? io::parse_int_list(opt.m)
                                                             : std::vector<int>{};
  const auto report = asymptotics::deviation_report(kind, ns, ms, cfg, opt.threads);
  for (const auto& r : report.rows)
    if (r.spike)
      std::cerr << "asym: spike at n = " << r.n << ", m = " << r.m.value_or(0)
                << " (prediction " << r.predicted << " near zero; ratio suppressed)\n";
  auto manifest = base_manifest("asym", args, cfg);
  manifest.parameters = {{"kind", opt.kind}, {"n", opt.n}, {"grid", opt.grid},
                         {"per_decade", opt.per_decade}};
  if (kind == asymptotics::DeviationKind::lambda) manifest.parameters["m"] = opt.m;
  emit(report.rows, opt, manifest, start);
  return kExitOk;
}

int run_spheres(const Options& opt, const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<int> ps, qs;
  if (!opt.p.empty() || !opt.q.empty()) {
    ps = io::parse_int_list(opt.p.empty() ? "1.." + std::to_string(opt.max) : opt.p);
    qs = io::parse_int_list(opt.q.empty() ? "1.." + std::to_string(opt.max) : opt.q);
  } else {
    ps = qs = io::parse_int_list("1.." + std::to_string(opt.max));
  }
  std::vector<io::SphereRow> rows;
  for (int p : ps)
    for (int q : qs) {
      if (p > q) continue;
      io::SphereRow row;
      row.p = p;
      row.q = q;
      const auto mi = spheres::sphere_morse_index(p, q);
      const auto by_rows = spheres::sphere_morse_index_by_rows(p, q);
      row.MI = mi.str();
      row.MI_rows = by_rows.str();
      row.expected = p + q + 3;
      row.matches = mi == row.expected && by_rows == row.expected;
      rows.push_back(row);
    }
  auto manifest = base_manifest("spheres", args, kernels::SolverConfig{});
  manifest.parameters = {{"max", opt.max}, {"p", opt.p}, {"q", opt.q}};
  emit(rows, opt, manifest, start);
  for (const auto& r : rows)
    if (!r.matches) return kExitSolverFailure;
  return kExitOk;
}

int run_selftest(const Options& opt) {
  const auto cfg = resolve_config(opt);
  int failures = 0;
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "  " << detail << '\n';
    if (!ok) ++failures;
  };
  auto fmt = [](double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
  };
  try {
    const auto g2 = geometry::solve_geometry(2, cfg);
    check("geometry n=2", std::abs(g2.W - 1.19968) < 1e-5 && std::abs(g2.H - 1.81017) < 1e-5,
          "W=" + fmt(g2.W) + " H=" + fmt(g2.H));
    const double l77 = spectrum::steklov(7, 7, spectrum::Parity::even, cfg).lambda;
    check("Lambda_0(7,7) = 7", std::abs(l77 - 7.0) < 1e-8, fmt(l77));
    const double l51 = spectrum::steklov(5, 1, spectrum::Parity::odd, cfg).lambda;
    check("Lambda_1(5,1) = 1", std::abs(l51 - 1.0) < 1e-8, fmt(l51));
    const double s91 = spectrum::steklov(91, 8, spectrum::Parity::even, cfg).lambda;
    check("Lambda_0(91,8)", std::abs(s91 - 0.99545) < 1e-5, fmt(s91));
    const double s11 = spectrum::steklov(11, 3, spectrum::Parity::even, cfg).lambda;
    check("Lambda_0(11,3)", std::abs(s11 - 1.02647) < 1e-5, fmt(s11));
    const auto mi2 = index::morse_index(2, cfg);
    check("MI(2) = 4", mi2 == 4, mi2.str());
    const auto mi100 = index::morse_index(100, cfg);
    check("MI(100)", mi100 == index::BigInt("350319724626"), mi100.str());
    const auto sp = spheres::sphere_morse_index(2, 3);
    check("MI(S^2 x S^3) = 8", sp == 8, sp.str());
  } catch (const std::exception& e) {
    check("selftest", false, e.what());
  }
  return failures == 0 ? kExitOk : 1;
}

void add_common(CLI::App* sub, Options& opt, bool with_tol = true) {
  sub->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", opt.out, "Output file (default stdout); a .manifest.json is written next to it");
  if (with_tol) {
    sub->add_option("--tol", opt.tol, "Solver tolerance (default 1e-12, or CATENOID_TOL)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", opt.threads, "Worker threads (0 = hardware concurrency)")
        ->capture_default_str();
  }
  sub->add_flag("--strict", opt.strict, "Abort on solver failure; exit 3 on uncertified index rows");
  sub->add_flag("--table5", opt.table5, "Round values to 5 decimals (half to even)");
  sub->add_option("--precision", opt.precision, "Significant digits in CSV")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free boundary minimal catenoid: geometry, Steklov spectrum and Morse index"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CATENOID_VERSION);
  Options opt;

  auto* geo = app.add_subcommand("geometry", "W, H, L, R per dimension");
  geo->add_option("--n", opt.n, "Dimensions, e.g. 2..100")->capture_default_str();
  add_common(geo, opt);

  auto* eig = app.add_subcommand("eig", "Steklov eigenvalues Lambda_i(n, m)");
  eig->add_option("--n", opt.n, "Dimensions")->capture_default_str();
  eig->add_option("--m", opt.m, "Harmonic modes")->capture_default_str();
  eig->add_option("--parity", opt.parity, "even, odd or both")
      ->check(CLI::IsMember({"even", "odd", "both"}))
      ->capture_default_str();
  add_common(eig, opt);

  auto* idx = app.add_subcommand("index", "K0, Steklov and Morse indices");
  idx->add_option("--n", opt.n, "Dimensions")->capture_default_str();
  idx->add_flag("--log-only", opt.log_only, "Skip exact integers, report log MI only");
  add_common(idx, opt);

  auto* asym = app.add_subcommand("asym", "Deviation from the asymptotic predictions");
  asym->add_option("--kind", opt.kind, "lambda, K0, logMI or geometry")
      ->check(CLI::IsMember({"lambda", "K0", "logMI", "geometry"}))
      ->capture_default_str();
  asym->add_option("--n", opt.n, "Dimension range")->capture_default_str();
  asym->add_option("--m", opt.m, "Modes (lambda kind)")->capture_default_str();
  asym->add_option("--grid", opt.grid, "auto, linear or log")->capture_default_str();
  asym->add_option("--per-decade", opt.per_decade, "Points per decade on log grids")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(asym, opt);

  auto* sph = app.add_subcommand("spheres", "Morse index of minimal products of spheres");
  sph->add_option("--max", opt.max, "Scan 1 <= p <= q <= max")->capture_default_str();
  sph->add_option("--p", opt.p, "p values");
  sph->add_option("--q", opt.q, "q values");
  add_common(sph, opt, false);

  auto* self = app.add_subcommand("selftest", "Quick numerical self-check");
  self->add_option("--tol", opt.tol, "Solver tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  const std::vector<std::string> args(argv + 1, argv + argc);

  try {
    if (*geo) return run_geometry(opt, args);
    if (*eig) return run_eig(opt, args);
    if (*idx) return run_index(opt, args);
    if (*asym) return run_asym(opt, args);
    if (*sph) return run_spheres(opt, args);
    if (*self) return run_selftest(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolverFailure;
  }
  return kExitOk;
}

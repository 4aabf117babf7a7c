#include "catenoid/asymptotics.hpp"

#include <algorithm>
#include <stdexcept>

#include "catenoid/geometry.hpp"
#include "catenoid/index.hpp"
#include "catenoid/parallel.hpp"
#include "catenoid/spectrum.hpp"

namespace catenoid::asymptotics {

PredictedGeometry predicted_geometry(double alpha) {
  if (!(alpha > 2.0)) throw std::domain_error("predicted_geometry: alpha must exceed 2");
  PredictedGeometry p;
  p.L_bar = (std::numbers::pi / alpha) * (1.0 + kKappa / alpha);
  p.W_bar = p.L_bar * (1.0 - 2.0 / alpha);
  p.H_bar = std::pow((alpha - 2.0) * p.L_bar / alpha, -2.0 / (alpha - 2.0));
  return p;
}

double predicted_lambda(int n, int m) {
  if (m < 1) throw std::domain_error("predicted_lambda: m must be >= 1");
  return m - static_cast<double>(n) / m;
}

PredictedCounts predicted_counts(int n) {
  if (n < 2) throw std::domain_error("predicted_counts: n must be >= 2");
  const double r = std::sqrt(static_cast<double>(n));
  return {r, r * std::log(r) + r};
}

AsymptoticPrediction predict(int n, std::optional<int> m) {
  AsymptoticPrediction p;
  p.n = n;
  p.alpha = geometry::alpha_of(n);
  if (p.alpha > 2.0) {
    const auto g = predicted_geometry(p.alpha);
    p.L_bar = g.L_bar;
    p.W_bar = g.W_bar;
    p.H_bar = g.H_bar;
  } else {
    p.L_bar = p.W_bar = p.H_bar = std::numeric_limits<double>::infinity();
  }
  if (m) p.lambda_bar = predicted_lambda(n, *m);
  const auto c = predicted_counts(n);
  p.K_bar = c.K_bar;
  p.logMI_bar = c.logMI_bar;
  return p;
}

double c_ratio(double alpha, double x, const SolverConfig& config) {
  if (!(alpha > 2.0)) throw std::domain_error("c_ratio: alpha must exceed 2");
  if (!(std::abs(x) < 1.0)) throw std::domain_error("c_ratio: |x| must be < 1");
  if (x == 0.0) return 1.0;
  const double L = geometry::half_length(alpha);
  const auto p = geometry::profile_alpha(alpha, L * std::abs(x), config);
  const double c = std::pow(p.f, -0.5 * (alpha - 2.0));
  return c / std::cos(0.5 * std::numbers::pi * x);
}

std::string_view to_string(DeviationKind kind) {
  switch (kind) {
    case DeviationKind::lambda: return "lambda";
    case DeviationKind::K0: return "K0";
    case DeviationKind::logMI: return "logMI";
    case DeviationKind::geometry: return "geometry";
  }
  throw std::invalid_argument("unknown deviation kind");
}

DeviationKind parse_deviation_kind(std::string_view text) {
  for (auto k : {DeviationKind::lambda, DeviationKind::K0, DeviationKind::logMI,
                 DeviationKind::geometry})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown deviation kind '" + std::string(text) + "'");
}

namespace {

DeviationRow lambda_row(const geometry::CatenoidGeometry& geo, int m, const SolverConfig& cfg) {
  DeviationRow row;
  row.n = geo.n;
  row.m = m;
  row.computed = spectrum::steklov(geo, m, spectrum::Parity::even, cfg).lambda;
  row.predicted = predicted_lambda(geo.n, m);
  row.scaled_error = (row.computed - row.predicted) / std::log(double(geo.n));
  row.scaling_label = "(lambda-lambda_bar)/log(n)";
  if (std::abs(row.predicted) < kSpikeThreshold) {
    row.spike = true;
  } else {
    row.ratio_error = row.computed / row.predicted - 1.0;
  }
  return row;
}

}  // namespace

DeviationReport deviation_report(DeviationKind kind, std::span<const int> ns_in,
                                 std::span<const int> ms_in, const SolverConfig& config,
                                 unsigned threads) {
  auto sorted_unique = [](std::span<const int> v) {
    std::vector<int> out(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  const std::vector<int> ns = sorted_unique(ns_in);
  const std::vector<int> ms = sorted_unique(ms_in);
  for (int n : ns)
    if (n < 2) throw std::domain_error("deviation_report: n must be >= 2");
  if (kind == DeviationKind::lambda && ms.empty())
    throw std::invalid_argument("deviation_report: lambda kind needs at least one m");
  if (kind == DeviationKind::geometry && std::find(ns.begin(), ns.end(), 2) != ns.end())
    throw std::domain_error("deviation_report: geometry predictions need n >= 3");

  const std::size_t per_n = kind == DeviationKind::lambda ? ms.size() : 1;
  std::vector<DeviationRow> rows(ns.size() * per_n);

  parallel_for(ns.size(), threads, [&](std::size_t i) {
    const int n = ns[i];
    const auto geo = geometry::solve_geometry(n, config);
    const double log_n = std::log(double(n));
    switch (kind) {
      case DeviationKind::lambda:
        for (std::size_t j = 0; j < ms.size(); ++j) rows[i * per_n + j] = lambda_row(geo, ms[j], config);
        break;
      case DeviationKind::K0: {
        DeviationRow row;
        row.n = n;
        row.computed = index::count_even_modes(geo, config).K0;
        row.predicted = predicted_counts(n).K_bar;
        row.scaled_error = (row.predicted - row.computed) / log_n;
        row.scaling_label = "(sqrt(n)-K0)/log(n)";
        row.ratio_error = row.computed / row.predicted - 1.0;
        rows[i] = row;
        break;
      }
      case DeviationKind::logMI: {
        DeviationRow row;
        row.n = n;
        const int K0 = index::count_even_modes(geo, config).K0;
        row.computed = index::log_morse_index_from_count(n, K0);
        row.predicted = predicted_counts(n).logMI_bar;
        row.scaled_error = (row.predicted - row.computed) / (log_n * log_n);
        row.scaling_label = "(logMI_bar-logMI)/log(n)^2";
        row.ratio_error = row.computed / row.predicted - 1.0;
        rows[i] = row;
        break;
      }
      case DeviationKind::geometry: {
        DeviationRow row;
        row.n = n;
        const auto pred = predicted_geometry(geo.alpha);
        row.computed = geo.W;
        row.predicted = pred.W_bar;
        row.scaled_error = geo.alpha * (geo.W - pred.W_bar) / pred.W_bar;
        row.scaling_label = "alpha*(W-W_bar)/W_bar";
        row.ratio_error = geo.W / pred.W_bar - 1.0;
        rows[i] = row;
        break;
      }
    }
  });
  return {kind, std::move(rows)};
}

std::vector<int> log_spaced(int lo, int hi, int per_decade) {
  if (lo < 1 || hi < lo || per_decade < 1) throw std::invalid_argument("log_spaced: bad range");
  std::vector<int> out;
  const double a = std::log10(double(lo)), b = std::log10(double(hi));
  const int count = std::max(1, static_cast<int>(std::ceil((b - a) * per_decade)));
  for (int k = 0; k <= count; ++k) {
    const int v = static_cast<int>(std::lround(std::pow(10.0, a + (b - a) * k / count)));
    if (out.empty() || v > out.back()) out.push_back(std::clamp(v, lo, hi));
  }
  if (out.back() != hi) out.push_back(hi);
  return out;
}

}  // namespace catenoid::asymptotics

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catenoid/kernels/solver_config.hpp"

namespace catenoid::asymptotics {

using kernels::SolverConfig;

/// κ in L_α = (π/α)(1 + κ/α + O(1/α²)).
inline const double kKappa = 2.0 * std::numbers::ln2;

struct PredictedGeometry {
  double L_bar;
  double W_bar;
  double H_bar;
};

/// Leading-order L, W, H for α > 2 (error terms dropped).
PredictedGeometry predicted_geometry(double alpha);

/// Λ̄_0(n, m) = m - n/m.
double predicted_lambda(int n, int m);

struct PredictedCounts {
  double K_bar;      // √n
  double logMI_bar;  // √n log √n + √n
};
PredictedCounts predicted_counts(int n);

/// All leading-order predictions for one dimension (and optionally one mode).
struct AsymptoticPrediction {
  double n = 0.0;
  double alpha = 0.0;
  double L_bar = 0.0;
  double H_bar = 0.0;
  double W_bar = 0.0;
  std::optional<double> lambda_bar;
  double K_bar = 0.0;
  double logMI_bar = 0.0;
  double kappa = kKappa;
};
AsymptoticPrediction predict(int n, std::optional<int> m = std::nullopt);

/// c_α(x)/c_∞(x) with c_α(x) = f(L x)^{-(α-2)/2} and c_∞(x) = cos(πx/2).
double c_ratio(double alpha, double x, const SolverConfig& config = {});

enum class DeviationKind { lambda, K0, logMI, geometry };
std::string_view to_string(DeviationKind kind);
DeviationKind parse_deviation_kind(std::string_view text);

struct DeviationRow {
  int n = 0;
  std::optional<int> m;
  double computed = 0.0;
  double predicted = 0.0;
  /// Difference-type scaling (always finite).
  double scaled_error = 0.0;
  std::string scaling_label;
  /// Ratio-type scaling computed/predicted - 1; empty where the prediction is
  /// too close to zero for a ratio to mean anything.
  std::optional<double> ratio_error;
  bool spike = false;
  bool operator==(const DeviationRow&) const = default;
};

struct DeviationReport {
  DeviationKind kind = DeviationKind::lambda;
  std::vector<DeviationRow> rows;
};

/// Predictions with |Λ̄| below this are flagged as spikes (ratio suppressed).
inline constexpr double kSpikeThreshold = 1.0;

/// Rows ordered by (n, m). `ms` is only used for kind = lambda.
DeviationReport deviation_report(DeviationKind kind, std::span<const int> ns,
                                 std::span<const int> ms, const SolverConfig& config = {},
                                 unsigned threads = 1);

/// Integers log-spaced on [lo, hi] with `per_decade` points per decade,
/// deduplicated, always including both ends.
std::vector<int> log_spaced(int lo, int hi, int per_decade);

}  // namespace catenoid::asymptotics

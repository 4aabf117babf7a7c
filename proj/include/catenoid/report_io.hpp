#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "catenoid/asymptotics.hpp"
#include "catenoid/kernels/solver_config.hpp"

namespace catenoid::io {

using nlohmann::json;

struct GeometryRow {
  int n = 0;
  double W = 0.0;
  double H = 0.0;
  double L = 0.0;
  double R = 0.0;
  bool ok = true;
  std::string error;
  bool operator==(const GeometryRow&) const = default;
};

struct EigenRow {
  int n = 0;
  int m = 0;
  std::string parity;
  double lambda = 0.0;
  bool ok = true;
  std::string error;
  bool operator==(const EigenRow&) const = default;
};

/// SI and MI are decimal strings (they outgrow 64-bit integers); empty in
/// log-only mode.
struct IndexRow {
  int n = 0;
  int K0 = 0;
  int K1 = 0;
  std::string SI;
  std::string MI;
  double logMI = 0.0;
  double margin = 0.0;
  double error_estimate = 0.0;
  bool certified = false;
  bool ok = true;
  std::string error;
  bool operator==(const IndexRow&) const = default;
};

struct SphereRow {
  int p = 0;
  int q = 0;
  std::string MI;
  std::string MI_rows;
  int expected = 0;
  bool matches = false;
  bool operator==(const SphereRow&) const = default;
};

void to_json(json& j, const GeometryRow& r);
void from_json(const json& j, GeometryRow& r);
void to_json(json& j, const EigenRow& r);
void from_json(const json& j, EigenRow& r);
void to_json(json& j, const IndexRow& r);
void from_json(const json& j, IndexRow& r);
void to_json(json& j, const SphereRow& r);
void from_json(const json& j, SphereRow& r);

}  // namespace catenoid::io

namespace catenoid::asymptotics {
void to_json(nlohmann::json& j, const DeviationRow& r);
void from_json(const nlohmann::json& j, DeviationRow& r);
}  // namespace catenoid::asymptotics

namespace catenoid::io {

struct CsvOptions {
  int precision = 10;   // significant digits
  bool table5 = false;  // fixed 5 decimals, round half to even
};

/// "inf", "-inf", "nan", fixed 5-decimal or %.{precision}g text.
std::string format_number(double value, const CsvOptions& opt);

/// Rounds to 5 decimals with ties to even on the exact binary value.
std::string round_half_even_5(double value);

void write_csv(std::ostream& os, const std::vector<GeometryRow>& rows, const CsvOptions& opt);
void write_csv(std::ostream& os, const std::vector<EigenRow>& rows, const CsvOptions& opt);
void write_csv(std::ostream& os, const std::vector<IndexRow>& rows, const CsvOptions& opt);
void write_csv(std::ostream& os, const std::vector<SphereRow>& rows, const CsvOptions& opt);
void write_csv(std::ostream& os, const std::vector<asymptotics::DeviationRow>& rows,
               const CsvOptions& opt);

/// Parses "7", "2..100" or comma lists of either ("2..5,9").
std::vector<int> parse_int_list(std::string_view text);

/// Companion metadata for an emitted data file.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  json parameters = json::object();
  kernels::SolverConfig tolerances;
  std::string version;
  double wall_time_seconds = 0.0;
  std::string data_file;
  std::string format;
  std::vector<bool> certified;  // per row, where certification applies
};

json manifest_to_json(const RunManifest& m);

}  // namespace catenoid::io

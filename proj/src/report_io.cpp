#include "catenoid/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace catenoid::io {

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_from(const json& j, double if_null) {
  return j.is_null() ? if_null : j.get<double>();
}

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return value;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

void to_json(json& j, const GeometryRow& r) {
  j = json{{"n", r.n},     {"W", number_or_null(r.W)},          {"H", number_or_null(r.H)},
           {"L", number_or_null(r.L)}, {"L_is_infinite", std::isinf(r.L)},
           {"R", number_or_null(r.R)}, {"ok", r.ok},           {"error", r.error}};
}

void from_json(const json& j, GeometryRow& r) {
  r.n = j.at("n").get<int>();
  r.W = number_from(j.at("W"), std::nan(""));
  r.H = number_from(j.at("H"), std::nan(""));
  r.L = j.at("L_is_infinite").get<bool>() ? kInf : number_from(j.at("L"), std::nan(""));
  r.R = number_from(j.at("R"), std::nan(""));
  r.ok = j.at("ok").get<bool>();
  r.error = j.at("error").get<std::string>();
}

void to_json(json& j, const EigenRow& r) {
  j = json{{"n", r.n},
           {"m", r.m},
           {"parity", r.parity},
           {"lambda", number_or_null(r.lambda)},
           {"lambda_is_minus_infinity", r.lambda == -kInf},
           {"ok", r.ok},
           {"error", r.error}};
}

void from_json(const json& j, EigenRow& r) {
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.parity = j.at("parity").get<std::string>();
  r.lambda = j.at("lambda_is_minus_infinity").get<bool>() ? -kInf
                                                          : number_from(j.at("lambda"), std::nan(""));
  r.ok = j.at("ok").get<bool>();
  r.error = j.at("error").get<std::string>();
}

void to_json(json& j, const IndexRow& r) {
  j = json{{"n", r.n},
           {"K0", r.K0},
           {"K1", r.K1},
           {"SI", r.SI},
           {"MI", r.MI},
           {"logMI", number_or_null(r.logMI)},
           {"margin", number_or_null(r.margin)},
           {"error_estimate", number_or_null(r.error_estimate)},
           {"certified", r.certified},
           {"ok", r.ok},
           {"error", r.error}};
}

void from_json(const json& j, IndexRow& r) {
  r.n = j.at("n").get<int>();
  r.K0 = j.at("K0").get<int>();
  r.K1 = j.at("K1").get<int>();
  r.SI = j.at("SI").get<std::string>();
  r.MI = j.at("MI").get<std::string>();
  r.logMI = number_from(j.at("logMI"), std::nan(""));
  r.margin = number_from(j.at("margin"), std::nan(""));
  r.error_estimate = number_from(j.at("error_estimate"), std::nan(""));
  r.certified = j.at("certified").get<bool>();
  r.ok = j.at("ok").get<bool>();
  r.error = j.at("error").get<std::string>();
}

void to_json(json& j, const SphereRow& r) {
  j = json{{"p", r.p},
           {"q", r.q},
           {"MI", r.MI},
           {"MI_rows", r.MI_rows},
           {"expected", r.expected},
           {"matches", r.matches}};
}

void from_json(const json& j, SphereRow& r) {
  r.p = j.at("p").get<int>();
  r.q = j.at("q").get<int>();
  r.MI = j.at("MI").get<std::string>();
  r.MI_rows = j.at("MI_rows").get<std::string>();
  r.expected = j.at("expected").get<int>();
  r.matches = j.at("matches").get<bool>();
}

std::string round_half_even_5(double value) {
  // glibc printf rounds the exact binary value correctly, ties to even.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", value);
  return buf;
}

std::string format_number(double value, const CsvOptions& opt) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (opt.table5) return round_half_even_5(value);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", opt.precision, value);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<GeometryRow>& rows, const CsvOptions& opt) {
  os << "n,W,H,L,R,ok,error\n";
  for (const auto& r : rows)
    os << r.n << ',' << format_number(r.W, opt) << ',' << format_number(r.H, opt) << ','
       << format_number(r.L, opt) << ',' << format_number(r.R, opt) << ',' << (r.ok ? 1 : 0)
       << ',' << csv_text(r.error) << '\n';
}

void write_csv(std::ostream& os, const std::vector<EigenRow>& rows, const CsvOptions& opt) {
  os << "n,m,parity,lambda,ok,error\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.m << ',' << r.parity << ',' << format_number(r.lambda, opt) << ','
       << (r.ok ? 1 : 0) << ',' << csv_text(r.error) << '\n';
}

void write_csv(std::ostream& os, const std::vector<IndexRow>& rows, const CsvOptions& opt) {
  CsvOptions diag = opt;
  diag.table5 = false;  // margins and error estimates keep significant digits
  os << "n,K0,K1,SI,MI,logMI,margin,error_estimate,certified,ok,error\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.K0 << ',' << r.K1 << ',' << r.SI << ',' << r.MI << ','
       << format_number(r.logMI, opt) << ',' << format_number(r.margin, diag) << ','
       << format_number(r.error_estimate, diag) << ',' << (r.certified ? 1 : 0) << ','
       << (r.ok ? 1 : 0) << ',' << csv_text(r.error) << '\n';
}

void write_csv(std::ostream& os, const std::vector<SphereRow>& rows, const CsvOptions&) {
  os << "p,q,MI,MI_rows,expected,matches\n";
  for (const auto& r : rows)
    os << r.p << ',' << r.q << ',' << r.MI << ',' << r.MI_rows << ',' << r.expected << ','
       << (r.matches ? 1 : 0) << '\n';
}

void write_csv(std::ostream& os, const std::vector<asymptotics::DeviationRow>& rows,
               const CsvOptions& opt) {
  os << "n,m,computed,predicted,scaled_error,scaling_label,ratio_error,spike\n";
  for (const auto& r : rows) {
    os << r.n << ',' << (r.m ? std::to_string(*r.m) : std::string()) << ','
       << format_number(r.computed, opt) << ',' << format_number(r.predicted, opt) << ','
       << format_number(r.scaled_error, opt) << ',' << csv_text(r.scaling_label) << ','
       << (r.ratio_error ? format_number(*r.ratio_error, opt) : std::string()) << ','
       << (r.spike ? 1 : 0) << '\n';
  }
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) throw std::invalid_argument("empty item in integer list");
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const int lo = parse_int(item.substr(0, dots));
      const int hi = parse_int(item.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("descending range '" + std::string(item) + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_int(item));
    }
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

json manifest_to_json(const RunManifest& m) {
  return json{{"command", m.command},
              {"arguments", m.arguments},
              {"parameters", m.parameters},
              {"tolerances",
               {{"rel_tol", m.tolerances.rel_tol},
                {"abs_tol", m.tolerances.abs_tol},
                {"quad_tol", m.tolerances.quad_tol},
                {"root_tol", m.tolerances.root_tol},
                {"max_steps", m.tolerances.max_steps}}},
              {"version", m.version},
              {"wall_time_seconds", m.wall_time_seconds},
              {"data_file", m.data_file},
              {"format", m.format},
              {"certified", m.certified}};
}

}  // namespace catenoid::io

namespace catenoid::asymptotics {

void to_json(nlohmann::json& j, const DeviationRow& r) {
  using nlohmann::json;
  j = json{{"n", r.n},
           {"m", r.m ? json(*r.m) : json(nullptr)},
           {"computed", r.computed},
           {"predicted", r.predicted},
           {"scaled_error", r.scaled_error},
           {"scaling_label", r.scaling_label},
           {"ratio_error", r.ratio_error ? json(*r.ratio_error) : json(nullptr)},
           {"spike", r.spike}};
}

void from_json(const nlohmann::json& j, DeviationRow& r) {
  r.n = j.at("n").get<int>();
  r.m = j.at("m").is_null() ? std::nullopt : std::optional<int>(j.at("m").get<int>());
  r.computed = j.at("computed").get<double>();
  r.predicted = j.at("predicted").get<double>();
  r.scaled_error = j.at("scaled_error").get<double>();
  r.scaling_label = j.at("scaling_label").get<std::string>();
  r.ratio_error = j.at("ratio_error").is_null()
                      ? std::nullopt
                      : std::optional<double>(j.at("ratio_error").get<double>());
  r.spike = j.at("spike").get<bool>();
}

}  // namespace catenoid::asymptotics

#include "partfn/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace partfn {

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) throw std::invalid_argument("CsvTable: row width does not match header");
  rows.push_back(std::move(row));
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += quote(fields[i]);
    }
    out += '\n';
  };
  emit(table.header);
  for (const auto& row : table.rows) emit(row);
  return out;
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  auto text = to_csv(table);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw std::runtime_error("write to " + path.string() + " failed");
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_log(const LogMag& v) { return v.is_zero() ? "-inf" : format_real(v.log()); }

std::string format_params(const ParamList& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ';';
    s += k;
    s += '=';
    s += v;
  }
  return s;
}

CsvTable ratio_csv(std::span<const RatioSample> samples) {
  CsvTable t{{"m", "log_pA", "log_p_alpha_m", "ratio"}, {}};
  for (const auto& s : samples)
    t.add_row({std::to_string(s.m), format_log(s.log_pa), format_real(s.log_p_alpha_m), format_real(s.ratio)});
  return t;
}

CsvTable density_csv(const DensityProfile& profile) {
  CsvTable t{{"n", "prefix_count", "density"}, {}};
  for (const auto& s : profile)
    t.add_row({std::to_string(s.n), std::to_string(s.prefix_count), format_real(s.density)});
  return t;
}

CsvTable audit_csv(std::span<const BoundReport> reports) {
  CsvTable t{{"lemma_id", "params", "lhs_log", "rhs_log", "slack", "preconditions_met", "pass"}, {}};
  for (const auto& r : reports)
    t.add_row({std::string(lemma_name(r.lemma)), format_params(r.params), format_log(r.lhs), format_log(r.rhs),
               format_real(r.slack), r.preconditions_met ? "true" : "false", r.pass ? "true" : "false"});
  return t;
}

}  // namespace partfn

#ifndef PARTFN_CSV_HPP
#define PARTFN_CSV_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "partfn/bounds_audit.hpp"
#include "partfn/constructions.hpp"
#include "partfn/ratio.hpp"

namespace partfn {

// Homogeneous records with a fixed header. Serialized as RFC 4180 CSV with
// LF line endings; fields are quoted only when they need it.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

std::string to_csv(const CsvTable& table);
// Throws std::runtime_error when the path cannot be written.
void write_csv(const CsvTable& table, const std::filesystem::path& path);

// Reals with 12 significant digits; "inf" / "-inf" for infinities.
std::string format_real(double v);
// log value, or "-inf" for the zero sentinel.
std::string format_log(const LogMag& v);
// "name=value;name=value"
std::string format_params(const ParamList& params);

// m,log_pA,log_p_alpha_m,ratio
CsvTable ratio_csv(std::span<const RatioSample> samples);
// n,prefix_count,density
CsvTable density_csv(const DensityProfile& profile);
// lemma_id,params,lhs_log,rhs_log,slack,preconditions_met,pass
CsvTable audit_csv(std::span<const BoundReport> reports);

}  // namespace partfn

#endif  // PARTFN_CSV_HPP

#ifndef RSW_REPORT_HPP
#define RSW_REPORT_HPP

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsw/diagnostics.hpp"
#include "rsw/field_grid.hpp"

// JSON / CSV serialization of diagnostic results. Reports carry a schema
// version and must be byte-stable for a fixed configuration: no timestamps,
// objects serialize in key order, doubles use shortest round-trip form.

namespace rsw {

inline constexpr int kReportSchemaVersion = 1;

inline nlohmann::ordered_json to_json(const DecayFit& fit) {
  return {{"exponent", fit.exponent},
          {"intercept", fit.intercept},
          {"exponent_se", fit.exponent_se},
          {"residual_rms", fit.residual_rms},
          {"fit_range", {fit.fit_lo, fit.fit_hi}},
          {"shells_used", fit.shells_used},
          {"note", "inverse-DFT fields are periodized; exponent valid inside fit_range only"}};
}

inline nlohmann::ordered_json to_json(const MomentTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [beta, value] : table.rows)
    rows.push_back({{"beta", beta.to_string(',')}, {"value", value}});
  return rows;
}

inline const char* ordering_status_name(OrderingStatus s) {
  switch (s) {
    case OrderingStatus::Pass: return "pass";
    case OrderingStatus::Fail: return "fail";
    default: return "inconclusive";
  }
}

inline nlohmann::ordered_json to_json(const OrderingVerdict& verdict,
                                      const std::vector<NamedDecayFit>& fits) {
  nlohmann::ordered_json order = nlohmann::ordered_json::array();
  for (std::size_t i : verdict.sorted_by_exponent) order.push_back(fits[i].name);
  nlohmann::ordered_json reqs = nlohmann::ordered_json::array();
  for (const OrderingResult& r : verdict.results) {
    const char* rel = r.requirement.kind == OrderingKind::LessEqualWithOffset
                          ? "exponent_leq_plus_offset"
                          : "abs_diff_within";
    reqs.push_back({{"lhs", fits[r.requirement.lhs].name},
                    {"rhs", fits[r.requirement.rhs].name},
                    {"relation", rel},
                    {"bound", r.requirement.bound},
                    {"slack", r.gap},
                    {"status", ordering_status_name(r.status)}});
  }
  return {{"sorted_fastest_decay_first", order},
          {"requirements", reqs},
          {"overall", ordering_status_name(verdict.overall)}};
}

inline void write_json(const nlohmann::ordered_json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report for writing: " + path.string());
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("report write failed: " + path.string());
}

// Shell/decay table CSV: r, max_abs, log_r, log_max (natural logs).
inline void write_decay_csv(const std::vector<ShellRow>& rows,
                            const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open csv for writing: " + path.string());
  out << "r,max_abs,log_r,log_max\n";
  out.precision(17);
  for (const ShellRow& row : rows) {
    out << row.r_center << "," << row.max_abs << ",";
    if (row.max_abs > 0.0 && row.r_center > 0.0)
      out << std::log(row.r_center) << "," << std::log(row.max_abs) << "\n";
    else
      out << "," << "\n";
  }
}

// Radial profile CSV: omega, value.
template <class Evaluator>
void write_profile_csv(const Evaluator& evaluator, double w_max, int samples,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open csv for writing: " + path.string());
  out << "omega,value\n";
  out.precision(17);
  for (int i = 0; i <= samples; ++i) {
    const double w = w_max * i / samples;
    out << w << "," << evaluator(w) << "\n";
  }
}

}  // namespace rsw

#endif  // RSW_REPORT_HPP

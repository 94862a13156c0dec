#include "sst/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace sst {

namespace {

using nlohmann::ordered_json;

const char* error_kind_name(ErrorModel::Kind kind) {
  switch (kind) {
    case ErrorModel::Kind::ExactSubstitution: return "substitution";
    case ErrorModel::Kind::RandomSubstitution: return "random-substitution";
    case ErrorModel::Kind::Burst: return "burst";
  }
  return "unknown";
}

ordered_json rounded(const std::vector<double>& values) {
  ordered_json out = ordered_json::array();
  for (double v : values) out.push_back(round6(v));
  return out;
}

ordered_json arm_json(const ArmStats& arm) {
  return {{"mean_bits", round6(arm.emitted_bits.mean)},
          {"se_bits", round6(arm.emitted_bits.std_error)},
          {"mean_ideal_bits", round6(arm.ideal_bits.mean)},
          {"se_ideal_bits", round6(arm.ideal_bits.std_error)}};
}

}  // namespace

std::string format6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double round6(double v) { return std::stod(format6(v)); }

std::string render_shaping_table(std::uint32_t m, std::uint32_t n,
                                 const std::vector<ShapingRow>& rows,
                                 ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json j = {{"alphabet", m}, {"n", n}, {"rows", ordered_json::array()}};
    for (const auto& r : rows)
      j["rows"].push_back({{"k", r.order},
                           {"length", r.length},
                           {"info_bits", round6(r.info.value())}});
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "k,length,info_bits\n";
  for (const auto& r : rows)
    out << r.order << ',' << r.length << ',' << format6(r.info.value())
        << '\n';
  return out.str();
}

std::string render_detection_report(const DetectionReport& report,
                                    ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json j = {
        {"config",
         {{"alphabet", report.alphabet_size},
          {"n", report.base_length},
          {"source", rounded(report.source)},
          {"error_kind", error_kind_name(report.error_kind)},
          {"error_count", report.error_count},
          {"error_probability", round6(report.error_probability)},
          {"seed", report.seed},
          {"seed_derivation", kSeedDerivationVersion}}},
        {"rows", ordered_json::array()}};
    for (const auto& r : report.rows)
      j["rows"].push_back({{"k", r.order},
                           {"trials", r.trials},
                           {"detected", r.detected},
                           {"rate", round6(r.rate)},
                           {"ci_low", round6(r.ci95.low)},
                           {"ci_high", round6(r.ci95.high)}});
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "k,trials,detected,rate,ci_low,ci_high\n";
  for (const auto& r : report.rows)
    out << r.order << ',' << r.trials << ',' << r.detected << ','
        << format6(r.rate) << ',' << format6(r.ci95.low) << ','
        << format6(r.ci95.high) << '\n';
  return out.str();
}

std::string render_bench_report(const BenchReport& report,
                                ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json j = {
        {"config",
         {{"alphabet", report.alphabet_size},
          {"n", report.base_length},
          {"k", report.order},
          {"source", rounded(report.source)},
          {"alpha", round6(report.alpha)},
          {"seed", report.seed},
          {"seed_derivation", kSeedDerivationVersion}}},
        {"trials", report.trials},
        {"raw", arm_json(report.raw)},
        {"shaped", arm_json(report.shaped)},
        {"ideal_difference",
         {{"mean_bits", round6(report.ideal_difference.mean)},
          {"se_bits", round6(report.ideal_difference.std_error)}}}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "arm,trials,mean_bits,se_bits,mean_ideal_bits,se_ideal_bits\n";
  auto row = [&](const char* name, const ArmStats& arm) {
    out << name << ',' << report.trials << ','
        << format6(arm.emitted_bits.mean) << ','
        << format6(arm.emitted_bits.std_error) << ','
        << format6(arm.ideal_bits.mean) << ','
        << format6(arm.ideal_bits.std_error) << '\n';
  };
  row("raw", report.raw);
  row("shaped", report.shaped);
  return out.str();
}

}  // namespace sst

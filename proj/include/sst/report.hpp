#pragma once

// CSV and JSON renderings of experiment results. Floating-point values are
// rounded to 6 significant digits in both formats, so the two carry identical
// numbers.

#include <string>
#include <vector>

#include "sst/analysis.hpp"
#include "sst/codec.hpp"
#include "sst/testability.hpp"

namespace sst {

enum class ReportFormat { Csv, Json };

/// printf("%.6g")
std::string format6(double v);
/// v rounded to the value format6 prints.
double round6(double v);

std::string render_shaping_table(std::uint32_t m, std::uint32_t n,
                                 const std::vector<ShapingRow>& rows,
                                 ReportFormat format);
std::string render_detection_report(const DetectionReport& report,
                                    ReportFormat format);
std::string render_bench_report(const BenchReport& report,
                                ReportFormat format);

}  // namespace sst

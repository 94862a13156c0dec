#pragma once

// Error injection and membership-based error detection over shaped strings.

#include <cstdint>
#include <vector>

#include "sst/core_model.hpp"
#include "sst/rng.hpp"
#include "sst/shaping.hpp"

namespace sst {

class ErrorModel {
 public:
  enum class Kind { ExactSubstitution, RandomSubstitution, Burst };

  /// Exactly `count` distinct positions get a different symbol.
  static ErrorModel exact_substitutions(std::uint32_t count);
  /// Each position independently gets a different symbol with probability p.
  static ErrorModel random_substitutions(double p);
  /// One window of `length` consecutive positions is redrawn uniformly.
  static ErrorModel burst(std::uint32_t length);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t count() const noexcept { return count_; }
  double probability() const noexcept { return probability_; }

 private:
  ErrorModel(Kind kind, std::uint32_t count, double p)
      : kind_(kind), count_(count), probability_(p) {}

  Kind kind_;
  std::uint32_t count_;
  double probability_;
};

/// Throws InvalidArgument when an exact count or burst exceeds the length.
SymbolString inject_errors(const SymbolString& s, const ErrorModel& em,
                           TrialRng& rng);

struct Interval {
  double low;
  double high;
};

/// Wilson score interval for `successes` out of `trials` at normal quantile z.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z);

inline constexpr double kZ95 = 1.959963984540054;

struct DetectionRow {
  std::uint32_t order = 0;
  std::uint64_t trials = 0;
  std::uint64_t detected = 0;
  /// Uncorrupted shaped strings that failed the membership test. Always 0
  /// for a correct shaper; tracked as a self-check.
  std::uint64_t false_positives = 0;
  double rate = 0.0;
  Interval ci95{0.0, 0.0};

  friend bool operator==(const DetectionRow& a, const DetectionRow& b) {
    return a.order == b.order && a.trials == b.trials &&
           a.detected == b.detected && a.false_positives == b.false_positives;
  }
};

struct DetectionReport {
  std::uint32_t alphabet_size = 0;
  std::uint32_t base_length = 0;
  std::vector<double> source;
  ErrorModel::Kind error_kind = ErrorModel::Kind::ExactSubstitution;
  std::uint32_t error_count = 0;
  double error_probability = 0.0;
  std::uint64_t seed = 0;
  std::vector<DetectionRow> rows;

  friend bool operator==(const DetectionReport&,
                         const DetectionReport&) = default;
};

/// Per trial: sample x, y = shape(x), corrupt y, and count a detection when
/// the corrupted string is outside the shaped set. Deterministic in seed.
DetectionReport run_detection_experiment(
    std::uint32_t m, std::uint32_t n, const std::vector<std::uint32_t>& orders,
    const SourceEnsemble& src, const ErrorModel& em, std::uint64_t trials,
    std::uint64_t seed, ClassTableCache& cache, unsigned threads = 0);

/// Exact detection probability for a uniform source and `errors` exact
/// substitutions, enumerating every shaped string, every error placement and
/// every replacement symbol. Throws CapacityExceeded when m^(N+K) exceeds the
/// cache's cap.
double detection_rate_exact_small(const ShapingParams& p,
                                  std::uint32_t errors,
                                  ClassTableCache& cache);

}  // namespace sst

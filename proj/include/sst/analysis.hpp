#pragma once

// Average information content of unshaped and shaped string sets, computed
// from class tables without enumerating strings.

#include <cstdint>
#include <vector>

#include "sst/combinatorial_index.hpp"
#include "sst/shaping.hpp"

namespace sst {

/// Mean empirical information content over all m^N strings (uniform source).
InfoBits average_info_unshaped(std::uint32_t m, std::uint32_t n,
                               ClassTableCache& cache);

/// Mean empirical information content of the shaped set, i.e. of the first
/// m^N strings of length N+K in canonical order (uniform source).
InfoBits average_info_shaped(const ShapingParams& p, ClassTableCache& cache);

struct ShapingRow {
  std::uint32_t order;
  std::uint32_t length;
  InfoBits info;
};

/// One row per K in 0..k_max.
std::vector<ShapingRow> shaping_table(std::uint32_t m, std::uint32_t n,
                                      std::uint32_t k_max,
                                      ClassTableCache& cache);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

/// Monte Carlo estimate of the shaped set's mean information content when
/// inputs come from an arbitrary source. Deterministic in (seed, trials).
Estimate average_info_shaped_nonuniform(const ShapingParams& p,
                                        const SourceEnsemble& src,
                                        std::uint64_t trials,
                                        std::uint64_t seed,
                                        ClassTableCache& cache,
                                        unsigned threads = 0);

/// Sample mean and standard error of the mean, summed in index order.
Estimate summarize(const std::vector<double>& samples);

}  // namespace sst

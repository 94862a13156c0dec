#pragma once

// Adaptive order-0 arithmetic coder and the raw-vs-shaped benchmark.

#include <cstdint>
#include <span>
#include <vector>

#include "sst/analysis.hpp"
#include "sst/core_model.hpp"
#include "sst/shaping.hpp"

namespace sst {

/// Adaptive frequency model with additive smoothing: symbol a is coded with
/// probability (count(a) + alpha) / (t + m*alpha) after t symbols.
///
/// alpha is held in 1/65536 units so that the coder's integer frequencies
/// and ideal_code_length() describe exactly the same model. alpha = 1 and
/// other dyadic values are represented exactly.
class CodecModelConfig {
 public:
  static constexpr std::uint64_t kAlphaScale = 1u << 16;

  explicit CodecModelConfig(std::uint32_t alphabet_size, double alpha = 1.0);

  std::uint32_t alphabet_size() const noexcept { return m_; }
  /// The smoothing constant actually used, after quantization.
  double alpha() const noexcept {
    return static_cast<double>(alpha_units_) / kAlphaScale;
  }
  std::uint64_t alpha_units() const noexcept { return alpha_units_; }

 private:
  std::uint32_t m_;
  std::uint64_t alpha_units_;
};

/// Coded bits, one element per bit, most significant first.
using BitSequence = std::vector<std::uint8_t>;

/// Extra bits the coder may spend beyond the 2-bit bound on |emitted - ideal|;
/// absorbs integer truncation of the coding interval.
inline constexpr double kTerminationSlackBits = 1.0;

BitSequence encode(const SymbolString& s, const CodecModelConfig& cfg);

/// n travels out of band. Throws MalformedBitstream if the decode range is
/// violated.
SymbolString decode(std::span<const std::uint8_t> bits, std::uint32_t n,
                    const CodecModelConfig& cfg);

/// -log2 of the adaptive model's probability of s.
InfoBits ideal_code_length(const SymbolString& s, const CodecModelConfig& cfg);

// Bitstream file: version byte, 4-byte big-endian symbol count, 1-byte
// alphabet size, then the coded bits packed big-endian with the last byte
// zero-padded.
inline constexpr std::uint8_t kBitstreamVersion = 1;

std::vector<std::uint8_t> pack_bits(const BitSequence& bits);
BitSequence unpack_bits(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> write_bitstream(const SymbolString& s,
                                          const CodecModelConfig& cfg);
/// The alphabet size comes from the header; only alpha is taken from the
/// caller.
SymbolString read_bitstream(std::span<const std::uint8_t> bytes,
                            double alpha = 1.0);

struct ArmStats {
  Estimate emitted_bits;
  Estimate ideal_bits;

  friend bool operator==(const ArmStats&, const ArmStats&) = default;
};

struct BenchReport {
  std::uint32_t alphabet_size = 0;
  std::uint32_t base_length = 0;
  std::uint32_t order = 0;
  std::vector<double> source;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  ArmStats raw;
  ArmStats shaped;
  /// Per-trial shaped minus raw ideal length, with its paired standard error.
  Estimate ideal_difference;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Per trial: sample x from src, code x (raw arm) and shape(x) (shaped arm).
BenchReport run_codec_benchmark(const ShapingParams& p,
                                const SourceEnsemble& src,
                                std::uint64_t trials, std::uint64_t seed,
                                double alpha, ClassTableCache& cache,
                                unsigned threads = 0);

}  // namespace sst

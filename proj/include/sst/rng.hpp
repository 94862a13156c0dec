#pragma once

// Deterministic random streams for Monte Carlo trials.
//
// Seed derivation (version 1): every trial gets its own stream, seeded with
//   derive_seed(base, stream, trial) = mix(mix(base ^ mix(stream)) + trial)
// where mix is the SplitMix64 finalizer. The stream itself is SplitMix64.
// Integer draws use Lemire's multiply-shift with rejection, doubles take the
// top 53 bits. None of this depends on the standard library's distribution
// implementations, so results are identical across platforms and thread
// counts.

#include <cstdint>
#include <span>

#include "sst/core_model.hpp"

namespace sst {

inline constexpr int kSeedDerivationVersion = 1;

constexpr std::uint64_t splitmix_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                    std::uint64_t trial) noexcept {
  return splitmix_mix(splitmix_mix(base ^ splitmix_mix(stream)) + trial);
}

class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) noexcept : state_(seed) {}
  TrialRng(std::uint64_t base, std::uint64_t stream, std::uint64_t trial)
      : state_(derive_seed(base, stream, trial)) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix_mix(state_);
  }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    unsigned __int128 product =
        static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform double in [0, 1).
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Draws a string of length n from the source, i.i.d. per symbol.
SymbolString sample_string(const SourceEnsemble& src, std::uint32_t n,
                           TrialRng& rng);

}  // namespace sst

#pragma once

// The shaping bijection from strings of length N onto the m^N lowest-ranked
// strings of length N+K under the canonical order, its inverse, and
// membership in the shaped set.

#include <cstdint>
#include <memory>

#include "sst/combinatorial_index.hpp"
#include "sst/core_model.hpp"

namespace sst {

struct ShapingParams {
  std::uint32_t alphabet_size;  // m
  std::uint32_t base_length;    // N
  std::uint32_t order;          // K, symbols added by shaping

  ShapingParams(std::uint32_t m, std::uint32_t n, std::uint32_t k);

  std::uint32_t shaped_length() const noexcept { return base_length + order; }
};

/// Holds the two class tables for one parameter set. Immutable and safe to
/// share between threads.
class Shaper {
 public:
  Shaper(const ShapingParams& params, ClassTableCache& cache);

  const ShapingParams& params() const noexcept { return params_; }
  /// m^N, the size of the domain and of the shaped set.
  const BigRank& domain_size() const noexcept { return domain_->total(); }
  const ClassTable& domain_table() const noexcept { return *domain_; }
  const ClassTable& shaped_table() const noexcept { return *shaped_; }

  SymbolString shape(const SymbolString& x) const;
  /// Throws NotInShapedSet if y is not the image of any input.
  SymbolString unshape(const SymbolString& y) const;
  bool contains(const SymbolString& y) const;

 private:
  ShapingParams params_;
  std::shared_ptr<const ClassTable> domain_;
  std::shared_ptr<const ClassTable> shaped_;
};

SymbolString shape(const SymbolString& x, const ShapingParams& p,
                   ClassTableCache& cache);
SymbolString unshape(const SymbolString& y, const ShapingParams& p,
                     ClassTableCache& cache);
bool is_in_shaped_set(const SymbolString& y, const ShapingParams& p,
                      ClassTableCache& cache);

}  // namespace sst

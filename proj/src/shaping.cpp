#include "sst/shaping.hpp"

#include <string>

#include "sst/errors.hpp"

namespace sst {

ShapingParams::ShapingParams(std::uint32_t m, std::uint32_t n,
                             std::uint32_t k)
    : alphabet_size(m), base_length(n), order(k) {
  if (m < 2) throw InvalidArgument("alphabet size must be >= 2");
  if (n < 1) throw InvalidArgument("base length must be >= 1");
}

Shaper::Shaper(const ShapingParams& params, ClassTableCache& cache)
    : params_(params),
      domain_(cache.get(params.base_length, params.alphabet_size)),
      shaped_(cache.get(params.shaped_length(), params.alphabet_size)) {}

SymbolString Shaper::shape(const SymbolString& x) const {
  if (x.size() != params_.base_length ||
      x.alphabet_size() != params_.alphabet_size)
    throw InvalidArgument("input of length " + std::to_string(x.size()) +
                          " does not match N=" +
                          std::to_string(params_.base_length));
  if (params_.order == 0) return x;
  return global_unrank(global_rank(x, *domain_), *shaped_);
}

bool Shaper::contains(const SymbolString& y) const {
  if (y.size() != params_.shaped_length() ||
      y.alphabet_size() != params_.alphabet_size)
    throw InvalidArgument("string does not have the shaped length");
  if (params_.order == 0) return true;
  const BigRank& budget = domain_->total();
  const auto& e = shaped_->entry(shaped_->find(composition_of(y)));
  // Whole classes on either side of the boundary need no in-class rank.
  if (e.start_rank >= budget) return false;
  if (e.start_rank + e.count <= budget) return true;
  return e.start_rank + rank_in_class(y) < budget;
}

SymbolString Shaper::unshape(const SymbolString& y) const {
  if (!contains(y)) throw NotInShapedSet("string " + y.to_text() +
                                         " is not in the shaped set");
  if (params_.order == 0) return y;
  return global_unrank(global_rank(y, *shaped_), *domain_);
}

SymbolString shape(const SymbolString& x, const ShapingParams& p,
                   ClassTableCache& cache) {
  return Shaper(p, cache).shape(x);
}

SymbolString unshape(const SymbolString& y, const ShapingParams& p,
                     ClassTableCache& cache) {
  return Shaper(p, cache).unshape(y);
}

bool is_in_shaped_set(const SymbolString& y, const ShapingParams& p,
                      ClassTableCache& cache) {
  return Shaper(p, cache).contains(y);
}

}  // namespace sst

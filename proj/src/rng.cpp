#include "sst/rng.hpp"

#include <vector>

namespace sst {

SymbolString sample_string(const SourceEnsemble& src, std::uint32_t n,
                           TrialRng& rng) {
  const std::uint32_t m = src.alphabet().size();
  std::vector<Symbol> out(n);
  if (src.is_uniform()) {
    for (auto& s : out) s = static_cast<Symbol>(rng.below(m));
    return SymbolString(src.alphabet(), std::move(out));
  }
  const auto probs = src.probs();
  for (auto& s : out) {
    const double u = rng.uniform();
    double acc = 0.0;
    Symbol pick = m;
    for (Symbol a = 0; a < m; ++a) {
      acc += probs[a];
      if (probs[a] > 0.0 && u < acc) {
        pick = a;
        break;
      }
    }
    // Rounding left u above the final cumulative sum: take the last symbol
    // with positive weight.
    if (pick == m)
      for (Symbol a = m; a-- > 0;)
        if (probs[a] > 0.0) {
          pick = a;
          break;
        }
    s = pick;
  }
  return SymbolString(src.alphabet(), std::move(out));
}

}  // namespace sst

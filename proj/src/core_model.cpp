#include "sst/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sst/errors.hpp"

namespace sst {

Alphabet::Alphabet(std::uint32_t size) : size_(size) {
  if (size < 2) throw InvalidArgument("alphabet needs at least 2 symbols");
}

InfoBits::InfoBits(double bits) : bits_(bits) {
  if (!std::isfinite(bits) || bits < 0.0)
    throw InvalidArgument("information must be finite and nonnegative");
}

SourceEnsemble::SourceEnsemble(Alphabet alphabet, std::vector<double> probs)
    : alphabet_(alphabet), probs_(std::move(probs)) {
  if (probs_.size() != alphabet_.size())
    throw InvalidArgument("source needs one probability per symbol");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw InvalidArgument("source probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw InvalidArgument("source probabilities must sum to 1");
}

SourceEnsemble SourceEnsemble::uniform(Alphabet alphabet) {
  const double p = 1.0 / alphabet.size();
  std::vector<double> probs(alphabet.size(), p);
  // Absorb rounding so the sum check is exact-ish for any m.
  probs.back() = 1.0 - p * (alphabet.size() - 1);
  return SourceEnsemble(alphabet, std::move(probs));
}

bool SourceEnsemble::is_uniform() const noexcept {
  const double p = 1.0 / alphabet_.size();
  return std::all_of(probs_.begin(), probs_.end(),
                     [p](double q) { return std::abs(q - p) < 1e-12; });
}

SymbolString::SymbolString(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvalidArgument("strings must be nonempty");
  for (Symbol s : symbols_)
    if (!alphabet_.contains(s))
      throw InvalidArgument("symbol " + std::to_string(s) +
                            " outside alphabet of size " +
                            std::to_string(alphabet_.size()));
}

SymbolString SymbolString::from_digits(Alphabet alphabet,
                                       std::string_view digits) {
  std::vector<Symbol> out;
  out.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '9')
      throw InvalidArgument(std::string("invalid digit '") + ch + "'");
    out.push_back(static_cast<Symbol>(ch - '0'));
  }
  return SymbolString(alphabet, std::move(out));
}

std::string SymbolString::to_text() const {
  std::string out;
  if (alphabet_.size() <= 10) {
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(symbols_[i]);
  }
  return out;
}

Composition::Composition(std::vector<std::uint32_t> counts)
    : counts_(std::move(counts)) {
  if (counts_.size() < 2)
    throw InvalidArgument("composition needs at least 2 parts");
  std::uint64_t n = 0;
  for (auto c : counts_) n += c;
  if (n == 0) throw InvalidArgument("composition of an empty string");
  length_ = static_cast<std::uint32_t>(n);
}

InfoBits shannon_entropy(const SourceEnsemble& src) {
  double h = 0.0;
  for (double p : src.probs())
    if (p > 0.0) h -= p * std::log2(p);
  return InfoBits(std::max(h, 0.0));
}

InfoBits empirical_info_content(const SymbolString& s) {
  std::vector<std::uint32_t> counts(s.alphabet_size(), 0);
  for (Symbol x : s.symbols()) ++counts[x];
  const double n = static_cast<double>(s.size());
  double bits = 0.0;
  for (Symbol x : s.symbols()) bits -= std::log2(counts[x] / n);
  return InfoBits(std::max(bits, 0.0));
}

InfoBits source_info_content(const SymbolString& s,
                             const SourceEnsemble& src) {
  if (src.alphabet() != s.alphabet())
    throw InvalidArgument("string and source alphabets differ");
  double bits = 0.0;
  for (Symbol x : s.symbols()) {
    const double p = src.prob(x);
    if (p <= 0.0)
      throw ZeroProbabilitySymbol("symbol " + std::to_string(x) +
                                  " has zero source probability");
    bits -= std::log2(p);
  }
  return InfoBits(std::max(bits, 0.0));
}

double sequence_probability(const SymbolString& s, const SourceEnsemble& src) {
  if (src.alphabet() != s.alphabet())
    throw InvalidArgument("string and source alphabets differ");
  double prob = 1.0;
  for (Symbol x : s.symbols()) prob *= src.prob(x);
  return prob;
}

Composition composition_of(const SymbolString& s) {
  std::vector<std::uint32_t> counts(s.alphabet_size(), 0);
  for (Symbol x : s.symbols()) ++counts[x];
  return Composition(std::move(counts));
}

InfoBits composition_info(const Composition& c) {
  std::vector<std::uint32_t> sorted(c.counts().begin(), c.counts().end());
  std::sort(sorted.begin(), sorted.end());
  const double n = c.length();
  double bits = 0.0;
  for (auto k : sorted)
    if (k > 0) bits -= k * std::log2(k / n);
  return InfoBits(std::max(bits, 0.0));
}

}  // namespace sst

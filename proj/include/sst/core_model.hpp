#pragma once

// Alphabets, sources, strings and the information measures defined over them.
// All information quantities are in bits (log base 2), with 0*log(0) = 0.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sst {

using Symbol = std::uint32_t;

class Alphabet {
 public:
  explicit Alphabet(std::uint32_t size);

  std::uint32_t size() const noexcept { return size_; }
  bool contains(Symbol s) const noexcept { return s < size_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::uint32_t size_;
};

/// Nonnegative, finite amount of information in bits.
class InfoBits {
 public:
  InfoBits() = default;
  explicit InfoBits(double bits);

  double value() const noexcept { return bits_; }

  friend auto operator<=>(const InfoBits&, const InfoBits&) = default;

 private:
  double bits_ = 0.0;
};

class SourceEnsemble {
 public:
  /// Weights must be nonnegative, one per symbol, and sum to 1 within 1e-12.
  SourceEnsemble(Alphabet alphabet, std::vector<double> probs);

  static SourceEnsemble uniform(Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const double> probs() const noexcept { return probs_; }
  double prob(Symbol s) const { return probs_.at(s); }
  bool is_uniform() const noexcept;

 private:
  Alphabet alphabet_;
  std::vector<double> probs_;
};

/// A nonempty sequence of symbols drawn from an alphabet.
class SymbolString {
 public:
  SymbolString(Alphabet alphabet, std::vector<Symbol> symbols);
  SymbolString(Alphabet alphabet, std::initializer_list<Symbol> symbols)
      : SymbolString(alphabet, std::vector<Symbol>(symbols)) {}

  /// Parses "0102"-style digit strings (alphabets up to 10 symbols).
  static SymbolString from_digits(Alphabet alphabet, std::string_view digits);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::uint32_t alphabet_size() const noexcept { return alphabet_.size(); }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  /// Digits for m <= 10, comma-separated integers otherwise.
  std::string to_text() const;

  friend bool operator==(const SymbolString&, const SymbolString&) = default;
  friend bool operator<(const SymbolString& a, const SymbolString& b) {
    return a.symbols_ < b.symbols_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

/// Symbol-count histogram of a string (its type class).
class Composition {
 public:
  explicit Composition(std::vector<std::uint32_t> counts);

  std::uint32_t alphabet_size() const noexcept {
    return static_cast<std::uint32_t>(counts_.size());
  }
  std::uint32_t length() const noexcept { return length_; }
  std::span<const std::uint32_t> counts() const noexcept { return counts_; }
  std::uint32_t operator[](std::size_t a) const { return counts_[a]; }

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.counts_ == b.counts_;
  }
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::vector<std::uint32_t> counts_;
  std::uint32_t length_ = 0;
};

InfoBits shannon_entropy(const SourceEnsemble& src);

/// -sum_j log2(count(s_j)/n), using the within-string frequency of each
/// symbol occurrence.
InfoBits empirical_info_content(const SymbolString& s);

/// -sum_j log2(P(s_j)) with P taken from the source. Throws
/// ZeroProbabilitySymbol if any symbol of s has zero probability.
InfoBits source_info_content(const SymbolString& s, const SourceEnsemble& src);

/// Product of per-symbol source probabilities (0 if any factor is 0).
double sequence_probability(const SymbolString& s, const SourceEnsemble& src);

Composition composition_of(const SymbolString& s);

/// -sum_a c_a*log2(c_a/n). Summed over the counts in sorted order so that
/// compositions that are permutations of each other give identical values.
InfoBits composition_info(const Composition& c);

}  // namespace sst

#pragma once

// Canonical total order on the strings of a fixed length, and polynomial-time
// ranking/unranking under it.
//
// Strings are grouped into type classes (compositions). Classes are ordered by
// ascending information content, with ties going to the class whose
// lexicographically smallest member comes first (equivalently, descending
// lexicographic order of the counts vector). Within a class, strings are in
// lexicographic order. The rank of a string is its 0-based position in this
// order.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sst/core_model.hpp"

namespace sst {

using BigRank = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultCompositionCap = 10'000'000;

/// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigRank& v);

/// m^n as an exact integer.
BigRank power(std::uint32_t m, std::uint32_t n);

/// Number of weak compositions of n into m parts, C(n+m-1, m-1).
BigRank composition_count(std::uint32_t n, std::uint32_t m);

/// All weak compositions of n into m parts, in descending lexicographic order
/// of the counts vector: (n,0,..,0) first, (0,..,0,n) last.
std::vector<Composition> enumerate_compositions(std::uint32_t n,
                                                std::uint32_t m);

/// n! / prod(c_a!)
BigRank multinomial_count(const Composition& c);

struct ClassEntry {
  Composition composition;
  InfoBits info;
  BigRank count;
  BigRank start_rank;
};

class ClassTable {
 public:
  std::uint32_t length() const noexcept { return n_; }
  std::uint32_t alphabet_size() const noexcept { return m_; }
  const std::vector<ClassEntry>& entries() const noexcept { return entries_; }
  const ClassEntry& entry(std::size_t i) const { return entries_.at(i); }
  /// m^n
  const BigRank& total() const noexcept { return total_; }

  /// Position of the class of c among the sorted entries.
  std::size_t find(const Composition& c) const;
  /// Position of the class containing global rank r (r < total()).
  std::size_t locate(const BigRank& r) const;

 private:
  friend ClassTable build_class_table(std::uint32_t, std::uint32_t,
                                      std::uint64_t);
  ClassTable() = default;
  std::uint64_t enumeration_index(std::span<const std::uint32_t> counts) const;
  std::uint64_t binom(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t n_ = 0;
  std::uint32_t m_ = 0;
  BigRank total_;
  std::vector<ClassEntry> entries_;
  // enumeration index (see enumerate_compositions) -> sorted position
  std::vector<std::uint32_t> sorted_position_;
  // binomial(a, b) for a <= n+m, b <= m, row-major
  std::vector<std::uint64_t> binom_;
};

/// Throws CapacityExceeded if the number of compositions exceeds `cap`.
ClassTable build_class_table(std::uint32_t n, std::uint32_t m,
                             std::uint64_t cap = kDefaultCompositionCap);

/// Thread-safe memo of class tables keyed by (n, m).
class ClassTableCache {
 public:
  explicit ClassTableCache(std::uint64_t cap = kDefaultCompositionCap)
      : cap_(cap) {}

  std::shared_ptr<const ClassTable> get(std::uint32_t n, std::uint32_t m);
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
  std::mutex mutex_;
  std::map<std::pair<std::uint32_t, std::uint32_t>,
           std::shared_ptr<const ClassTable>>
      tables_;
};

/// Position of s among the lexicographically ordered strings sharing its
/// composition.
BigRank rank_in_class(const SymbolString& s);

/// Inverse of rank_in_class. Throws RankOutOfRange unless
/// 0 <= r < multinomial_count(c).
SymbolString unrank_in_class(const Composition& c, const BigRank& r);

BigRank global_rank(const SymbolString& s, const ClassTable& table);

/// Throws RankOutOfRange unless 0 <= r < m^n.
SymbolString global_unrank(const BigRank& r, const ClassTable& table);

}  // namespace sst

#include "sst/combinatorial_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "sst/errors.hpp"

namespace sst {

namespace {

void enumerate_into(std::uint32_t rem, std::size_t pos,
                    std::vector<std::uint32_t>& counts,
                    std::vector<Composition>& out) {
  if (pos + 1 == counts.size()) {
    counts[pos] = rem;
    out.emplace_back(counts);
    return;
  }
  for (std::uint32_t v = rem + 1; v-- > 0;) {
    counts[pos] = v;
    enumerate_into(rem - v, pos + 1, counts, out);
  }
}

// prod_a c_a^c_a. Information content is n*log2(n) - log2(key), so a larger
// key means lower information, and equal keys mean exactly equal information.
BigRank info_key(const Composition& c) {
  BigRank key = 1;
  for (auto k : c.counts())
    if (k > 1) key *= boost::multiprecision::pow(BigRank(k), k);
  return key;
}

}  // namespace

double log2_big(const BigRank& v) {
  if (v <= 0) throw InvalidArgument("log2 of a nonpositive integer");
  const auto msb = static_cast<long>(boost::multiprecision::msb(v));
  const long shift = std::max(0L, msb - 62);
  const BigRank top = v >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

BigRank power(std::uint32_t m, std::uint32_t n) {
  return boost::multiprecision::pow(BigRank(m), n);
}

BigRank composition_count(std::uint32_t n, std::uint32_t m) {
  // C(n+m-1, m-1) built incrementally; each partial product is an integer.
  BigRank r = 1;
  for (std::uint32_t i = 1; i < m; ++i) {
    r *= n + i;
    r /= i;
  }
  return r;
}

std::vector<Composition> enumerate_compositions(std::uint32_t n,
                                                std::uint32_t m) {
  if (n < 1) throw InvalidArgument("composition length must be >= 1");
  if (m < 2) throw InvalidArgument("alphabet size must be >= 2");
  std::vector<Composition> out;
  std::vector<std::uint32_t> counts(m, 0);
  enumerate_into(n, 0, counts, out);
  return out;
}

BigRank multinomial_count(const Composition& c) {
  // Product of binomials C(c_0 + .. + c_a, c_a).
  BigRank r = 1;
  std::uint32_t seen = 0;
  for (auto k : c.counts()) {
    for (std::uint32_t i = 1; i <= k; ++i) {
      r *= seen + i;
      r /= i;
    }
    seen += k;
  }
  return r;
}

std::uint64_t ClassTable::binom(std::uint32_t a, std::uint32_t b) const {
  if (b > a) return 0;
  return binom_[static_cast<std::size_t>(a) * m_ + b];
}

std::uint64_t ClassTable::enumeration_index(
    std::span<const std::uint32_t> counts) const {
  std::uint64_t index = 0;
  std::uint32_t rem = n_;
  for (std::uint32_t i = 0; i + 1 < m_; ++i) {
    const std::uint32_t c = counts[i];
    // Compositions earlier in the enumeration have a larger value here.
    index += binom(rem - c + m_ - i - 2, m_ - i - 1);
    rem -= c;
  }
  return index;
}

std::size_t ClassTable::find(const Composition& c) const {
  if (c.alphabet_size() != m_ || c.length() != n_)
    throw InvalidArgument("composition does not match class table");
  return sorted_position_[enumeration_index(c.counts())];
}

std::size_t ClassTable::locate(const BigRank& r) const {
  if (r < 0 || r >= total_)
    throw RankOutOfRange("global rank outside [0, m^n)");
  auto it = std::upper_bound(
      entries_.begin(), entries_.end(), r,
      [](const BigRank& v, const ClassEntry& e) { return v < e.start_rank; });
  return static_cast<std::size_t>(std::distance(entries_.begin(), it)) - 1;
}

ClassTable build_class_table(std::uint32_t n, std::uint32_t m,
                             std::uint64_t cap) {
  if (n < 1) throw InvalidArgument("string length must be >= 1");
  if (m < 2) throw InvalidArgument("alphabet size must be >= 2");
  const BigRank classes = composition_count(n, m);
  if (classes > cap)
    throw CapacityExceeded("class table for n=" + std::to_string(n) +
                           ", m=" + std::to_string(m) + " has " +
                           classes.str() + " compositions (cap " +
                           std::to_string(cap) + ")");

  ClassTable t;
  t.n_ = n;
  t.m_ = m;
  t.total_ = power(m, n);

  const std::uint32_t rows = n + m + 1;
  t.binom_.assign(static_cast<std::size_t>(rows) * m, 0);
  for (std::uint32_t a = 0; a < rows; ++a) {
    t.binom_[static_cast<std::size_t>(a) * m] = 1;
    for (std::uint32_t b = 1; b < m && b <= a; ++b) {
      const auto up = static_cast<std::size_t>(a - 1) * m;
      const std::uint64_t left = t.binom_[up + b - 1];
      const std::uint64_t right = b <= a - 1 ? t.binom_[up + b] : 0;
      // Entries outside the range ever queried may saturate.
      t.binom_[static_cast<std::size_t>(a) * m + b] =
          left > UINT64_MAX - right ? UINT64_MAX : left + right;
    }
  }

  auto comps = enumerate_compositions(n, m);
  std::vector<double> approx(comps.size());
  std::vector<double> lg(n + 1, 0.0);
  for (std::uint32_t k = 2; k <= n; ++k) lg[k] = k * std::log2(k);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<std::uint32_t> sorted(comps[i].counts().begin(),
                                      comps[i].counts().end());
    std::sort(sorted.begin(), sorted.end());
    double v = 0.0;
    for (auto k : sorted) v += lg[k];
    approx[i] = v;
  }
  // Exact keys are only needed to settle near-ties of the float key.
  std::vector<std::optional<BigRank>> exact(comps.size());
  auto exact_key = [&](std::uint32_t i) -> const BigRank& {
    if (!exact[i]) exact[i] = info_key(comps[i]);
    return *exact[i];
  };

  std::vector<std::uint32_t> order(comps.size());
  std::iota(order.begin(), order.end(), 0u);
  // Enumeration order is already descending-lex, so a stable sort on the
  // information key alone gives the canonical class order.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     const double da = approx[a], db = approx[b];
                     if (std::abs(da - db) > 1e-9 * std::max(1.0, da))
                       return da > db;
                     return exact_key(a) > exact_key(b);
                   });

  std::vector<BigRank> factorial(n + 1);
  factorial[0] = 1;
  for (std::uint32_t k = 1; k <= n; ++k) factorial[k] = factorial[k - 1] * k;

  t.entries_.reserve(comps.size());
  t.sorted_position_.assign(comps.size(), 0);
  BigRank start = 0;
  for (std::uint32_t pos = 0; pos < order.size(); ++pos) {
    const Composition& c = comps[order[pos]];
    BigRank denom = 1;
    for (auto k : c.counts())
      if (k > 1) denom *= factorial[k];
    BigRank count = factorial[n] / denom;
    t.entries_.push_back(ClassEntry{c, composition_info(c), count, start});
    start += count;
    t.sorted_position_[order[pos]] = pos;
  }
  return t;
}

std::shared_ptr<const ClassTable> ClassTableCache::get(std::uint32_t n,
                                                       std::uint32_t m) {
  std::lock_guard lock(mutex_);
  auto& slot = tables_[{n, m}];
  if (!slot) {
    try {
      slot = std::make_shared<const ClassTable>(build_class_table(n, m, cap_));
    } catch (...) {
      tables_.erase({n, m});
      throw;
    }
  }
  return slot;
}

BigRank rank_in_class(const SymbolString& s) {
  const std::uint32_t m = s.alphabet_size();
  std::vector<std::uint32_t> rem(m, 0);
  for (Symbol x : s.symbols()) ++rem[x];
  std::uint32_t left = static_cast<std::uint32_t>(s.size());
  BigRank arrangements = multinomial_count(Composition(rem));
  BigRank rank = 0;
  for (Symbol x : s.symbols()) {
    // Strings with a smaller symbol here precede s within the class.
    for (Symbol a = 0; a < x; ++a)
      if (rem[a] > 0) rank += arrangements * rem[a] / left;
    arrangements = arrangements * rem[x] / left;
    --rem[x];
    --left;
  }
  return rank;
}

SymbolString unrank_in_class(const Composition& c, const BigRank& r) {
  BigRank arrangements = multinomial_count(c);
  if (r < 0 || r >= arrangements)
    throw RankOutOfRange("rank outside its type class");
  const std::uint32_t m = c.alphabet_size();
  std::vector<std::uint32_t> rem(c.counts().begin(), c.counts().end());
  std::uint32_t left = c.length();
  BigRank rest = r;
  std::vector<Symbol> out;
  out.reserve(left);
  while (left > 0) {
    for (Symbol a = 0; a < m; ++a) {
      if (rem[a] == 0) continue;
      BigRank block = arrangements * rem[a] / left;
      if (rest < block) {
        out.push_back(a);
        arrangements = std::move(block);
        --rem[a];
        break;
      }
      rest -= block;
    }
    --left;
  }
  return SymbolString(Alphabet(m), std::move(out));
}

BigRank global_rank(const SymbolString& s, const ClassTable& table) {
  if (s.size() != table.length() || s.alphabet_size() != table.alphabet_size())
    throw InvalidArgument("string does not match class table");
  const auto& e = table.entry(table.find(composition_of(s)));
  return e.start_rank + rank_in_class(s);
}

SymbolString global_unrank(const BigRank& r, const ClassTable& table) {
  const auto& e = table.entry(table.locate(r));
  return unrank_in_class(e.composition, r - e.start_rank);
}

}  // namespace sst

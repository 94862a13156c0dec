#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sst/combinatorial_index.hpp"
#include "sst/errors.hpp"
#include "sst/rng.hpp"

using namespace sst;

namespace {

std::uint64_t choose(std::uint32_t n, std::uint32_t k) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("enumerate compositions") {
  const auto two = enumerate_compositions(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == Composition({2, 0}));
  CHECK(two[1] == Composition({1, 1}));
  CHECK(two[2] == Composition({0, 2}));
  CHECK(enumerate_compositions(12, 3).size() == choose(14, 2));
  CHECK(choose(14, 2) == 91);
  CHECK(enumerate_compositions(1, 3).size() == 3);
  for (std::uint32_t n = 1; n <= 7; ++n)
    for (std::uint32_t m = 2; m <= 5; ++m) {
      const auto comps = enumerate_compositions(n, m);
      CHECK(comps.size() == choose(n + m - 1, m - 1));
      CHECK(std::set<Composition>(comps.begin(), comps.end()).size() ==
            comps.size());
      CHECK(composition_count(n, m) == comps.size());
    }
}

TEST_CASE("multinomial count matches factorial oracle") {
  CHECK(multinomial_count(Composition({4, 3, 3})) ==
        oracle::factorial(10) /
            (oracle::factorial(4) * oracle::factorial(3) * oracle::factorial(3)));
  CHECK(multinomial_count(Composition({4, 3, 3})) == 4200);
  CHECK(multinomial_count(Composition({9, 0, 0, 0})) == 1);
  CHECK(multinomial_count(Composition({1, 1})) == 2);
  // Beyond 64 bits: 60!/(20!^3)
  BigRank f60 = 1, f20 = 1;
  for (int i = 2; i <= 60; ++i) f60 *= i;
  for (int i = 2; i <= 20; ++i) f20 *= i;
  CHECK(multinomial_count(Composition({20, 20, 20})) == f60 / (f20 * f20 * f20));
}

TEST_CASE("class table for n=2, m=2") {
  const auto t = build_class_table(2, 2);
  REQUIRE(t.entries().size() == 3);
  CHECK(t.entry(0).composition == Composition({2, 0}));
  CHECK(t.entry(1).composition == Composition({0, 2}));
  CHECK(t.entry(2).composition == Composition({1, 1}));
  CHECK(t.entry(0).info.value() == 0.0);
  CHECK(t.entry(1).info.value() == 0.0);
  CHECK(t.entry(2).info.value() == doctest::Approx(2.0));
  CHECK(t.entry(0).start_rank == 0);
  CHECK(t.entry(1).start_rank == 1);
  CHECK(t.entry(2).start_rank == 2);
}

TEST_CASE("class table n=1, m=2 and n=17, m=3") {
  const auto one = build_class_table(1, 2);
  REQUIRE(one.entries().size() == 2);
  CHECK(one.entry(0).composition == Composition({1, 0}));
  CHECK(one.entry(1).composition == Composition({0, 1}));

  const auto t = build_class_table(17, 3);
  CHECK(t.entries().size() == choose(19, 2));
  CHECK(t.entries().size() == 171);
  BigRank sum = 0;
  for (std::size_t i = 0; i < t.entries().size(); ++i) {
    const auto& e = t.entry(i);
    CHECK(e.start_rank == sum);
    sum += e.count;
    if (i > 0) CHECK(e.info.value() >= t.entry(i - 1).info.value() - 1e-12);
    CHECK(t.find(e.composition) == i);
  }
  CHECK(sum == 129140163);
  CHECK(t.total() == 129140163);
}

TEST_CASE("class table totals are exact for large n") {
  const auto t = build_class_table(100, 4);
  BigRank sum = 0;
  for (const auto& e : t.entries()) sum += e.count;
  CHECK(sum == power(4, 100));
}

TEST_CASE("capacity cap") {
  CHECK_THROWS_AS(build_class_table(120, 16), CapacityExceeded);
  CHECK_THROWS_AS(build_class_table(10, 3, 50), CapacityExceeded);
  CHECK_NOTHROW(build_class_table(10, 3, 66));
  ClassTableCache cache(50);
  CHECK_THROWS_AS(cache.get(10, 3), CapacityExceeded);
  CHECK(cache.get(5, 3)->entries().size() == 21);
}

TEST_CASE("cache returns the same table") {
  ClassTableCache cache;
  CHECK(cache.get(9, 3).get() == cache.get(9, 3).get());
}

TEST_CASE("rank within class") {
  CHECK(rank_in_class(str(2, "0011")) == 0);
  CHECK(rank_in_class(str(2, "1100")) == 5);
  CHECK(rank_in_class(str(2, "01")) == 0);
  CHECK(unrank_in_class(Composition({2, 2}), 0) == str(2, "0011"));
  CHECK(unrank_in_class(Composition({2, 2}), 5) == str(2, "1100"));
  CHECK(unrank_in_class(Composition({3, 0}), 0) == str(2, "000"));
  CHECK_THROWS_AS(unrank_in_class(Composition({2, 2}), 6), RankOutOfRange);
  CHECK_THROWS_AS(unrank_in_class(Composition({2, 2}), -1), RankOutOfRange);
}

TEST_CASE("rank within class agrees with lexicographic enumeration, n<=8") {
  for (std::uint32_t m = 2; m <= 3; ++m)
    for (std::uint32_t n = 1; n <= 8; ++n)
      for (const auto& [raw, r] : oracle::in_class_ranks(m, n)) {
        const auto s = to_sst(raw, m);
        CHECK(rank_in_class(s) == r);
        CHECK(unrank_in_class(composition_of(s), r) == s);
      }
}

TEST_CASE("global rank examples") {
  const auto t = build_class_table(2, 2);
  CHECK(global_rank(str(2, "00"), t) == 0);
  CHECK(global_rank(str(2, "11"), t) == 1);
  CHECK(global_rank(str(2, "01"), t) == 2);
  CHECK(global_rank(str(2, "10"), t) == 3);
  CHECK(global_unrank(0, t) == str(2, "00"));
  CHECK(global_unrank(1, t) == str(2, "11"));
  CHECK(global_unrank(3, t) == str(2, "10"));
  CHECK_THROWS_AS(global_unrank(4, t), RankOutOfRange);
  CHECK_THROWS_AS(global_rank(str(2, "000"), t), InvalidArgument);
}

TEST_CASE("global rank matches brute-force canonical order, m<=3, n<=8") {
  for (std::uint32_t m = 2; m <= 3; ++m)
    for (std::uint32_t n = 1; n <= 8; ++n) {
      const auto t = build_class_table(n, m);
      const auto order = oracle::canonical_order(m, n);
      double prev_info = 0.0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        const auto s = to_sst(order[i], m);
        CHECK(global_rank(s, t) == i);
        CHECK(global_unrank(i, t) == s);
        const double info = empirical_info_content(s).value();
        CHECK(info >= prev_info - 1e-9);
        prev_info = info;
      }
    }
}

TEST_CASE("global rank round trip, random strings up to n=120") {
  TrialRng rng(20261018);
  ClassTableCache cache;
  const std::pair<std::uint32_t, std::uint32_t> shapes[] = {
      {2, 120}, {3, 120}, {3, 97}, {4, 120}, {4, 33}, {5, 40}, {8, 12}};
  for (auto [m, n] : shapes) {
    const auto t = cache.get(n, m);
    const auto src = SourceEnsemble::uniform(Alphabet(m));
    for (int trial = 0; trial < 50; ++trial) {
      const auto s = sample_string(src, n, rng);
      const auto r = global_rank(s, *t);
      CHECK(r < t->total());
      CHECK(global_unrank(r, *t) == s);
    }
    // Both ends of the order.
    CHECK(global_rank(global_unrank(0, *t), *t) == 0);
    CHECK(global_rank(global_unrank(t->total() - 1, *t), *t) == t->total() - 1);
  }
}

TEST_CASE("log2 of big integers") {
  CHECK(log2_big(BigRank(1)) == 0.0);
  CHECK(log2_big(power(2, 300)) == doctest::Approx(300.0));
  CHECK(log2_big(power(3, 100)) ==
        doctest::Approx(100 * std::log2(3.0)).epsilon(1e-13));
}

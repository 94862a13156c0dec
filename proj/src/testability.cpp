#include "sst/testability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "parallel.hpp"
#include "sst/errors.hpp"

namespace sst {

namespace {

constexpr std::uint64_t kDetectionStream = 0x4445544543540000ULL;  // "DETECT"

Symbol different_symbol(Symbol old, std::uint32_t m, TrialRng& rng) {
  return static_cast<Symbol>((old + 1 + rng.below(m - 1)) % m);
}

}  // namespace

ErrorModel ErrorModel::exact_substitutions(std::uint32_t count) {
  return ErrorModel(Kind::ExactSubstitution, count, 0.0);
}

ErrorModel ErrorModel::random_substitutions(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InvalidArgument("error probability must lie in [0, 1]");
  return ErrorModel(Kind::RandomSubstitution, 0, p);
}

ErrorModel ErrorModel::burst(std::uint32_t length) {
  return ErrorModel(Kind::Burst, length, 0.0);
}

SymbolString inject_errors(const SymbolString& s, const ErrorModel& em,
                           TrialRng& rng) {
  const std::uint32_t m = s.alphabet_size();
  const auto n = static_cast<std::uint32_t>(s.size());
  std::vector<Symbol> out(s.symbols().begin(), s.symbols().end());
  switch (em.kind()) {
    case ErrorModel::Kind::ExactSubstitution: {
      if (em.count() > n)
        throw InvalidArgument("error count " + std::to_string(em.count()) +
                              " exceeds string length " + std::to_string(n));
      // Partial Fisher-Yates picks count distinct positions.
      std::vector<std::uint32_t> pos(n);
      std::iota(pos.begin(), pos.end(), 0u);
      for (std::uint32_t i = 0; i < em.count(); ++i) {
        const auto j = i + static_cast<std::uint32_t>(rng.below(n - i));
        std::swap(pos[i], pos[j]);
        out[pos[i]] = different_symbol(out[pos[i]], m, rng);
      }
      break;
    }
    case ErrorModel::Kind::RandomSubstitution:
      for (auto& sym : out)
        if (rng.uniform() < em.probability())
          sym = different_symbol(sym, m, rng);
      break;
    case ErrorModel::Kind::Burst: {
      if (em.count() > n)
        throw InvalidArgument("burst longer than the string");
      if (em.count() == 0) break;
      const auto start =
          static_cast<std::uint32_t>(rng.below(n - em.count() + 1));
      for (std::uint32_t i = start; i < start + em.count(); ++i)
        out[i] = static_cast<Symbol>(rng.below(m));
      break;
    }
  }
  return SymbolString(s.alphabet(), std::move(out));
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

DetectionReport run_detection_experiment(
    std::uint32_t m, std::uint32_t n, const std::vector<std::uint32_t>& orders,
    const SourceEnsemble& src, const ErrorModel& em, std::uint64_t trials,
    std::uint64_t seed, ClassTableCache& cache, unsigned threads) {
  if (src.alphabet().size() != m)
    throw InvalidArgument("source alphabet does not match alphabet size");
  if (trials == 0) throw InvalidArgument("trials must be positive");

  DetectionReport report;
  report.alphabet_size = m;
  report.base_length = n;
  report.source.assign(src.probs().begin(), src.probs().end());
  report.error_kind = em.kind();
  report.error_count = em.count();
  report.error_probability = em.probability();
  report.seed = seed;

  for (std::uint32_t k : orders) {
    const Shaper shaper(ShapingParams(m, n, k), cache);
    std::vector<std::uint8_t> detected(trials, 0), false_pos(trials, 0);
    detail::parallel_for(trials, threads, [&](std::uint64_t i) {
      TrialRng rng(seed, kDetectionStream + k, i);
      const auto x = sample_string(src, n, rng);
      const auto y = shaper.shape(x);
      false_pos[i] = !shaper.contains(y);
      detected[i] = !shaper.contains(inject_errors(y, em, rng));
    });
    DetectionRow row;
    row.order = k;
    row.trials = trials;
    row.detected = std::accumulate(detected.begin(), detected.end(),
                                   std::uint64_t{0});
    row.false_positives = std::accumulate(false_pos.begin(), false_pos.end(),
                                          std::uint64_t{0});
    row.rate = static_cast<double>(row.detected) / trials;
    row.ci95 = wilson_interval(row.detected, trials, kZ95);
    report.rows.push_back(row);
  }
  return report;
}

double detection_rate_exact_small(const ShapingParams& p,
                                  std::uint32_t errors,
                                  ClassTableCache& cache) {
  const std::uint32_t m = p.alphabet_size;
  const std::uint32_t len = p.shaped_length();
  if (errors > len) throw InvalidArgument("more errors than symbols");
  const BigRank space = power(m, len);
  if (space > cache.cap())
    throw CapacityExceeded("m^(N+K) = " + space.str() +
                           " is too large to enumerate");
  if (errors == 0) return 0.0;

  // Strings are coded as base-m integers, most significant symbol first.
  std::vector<std::uint64_t> place(len);
  for (std::uint32_t i = len, w = 1; i-- > 0; w *= m) place[i] = w;

  const Shaper shaper(p, cache);
  const auto domain = power(m, p.base_length).convert_to<std::uint64_t>();
  std::vector<std::uint64_t> images;
  std::vector<std::vector<Symbol>> strings;
  images.reserve(domain);
  strings.reserve(domain);
  for (std::uint64_t r = 0; r < domain; ++r) {
    // The shaped set is the image of shape() over the whole domain.
    const auto x = global_unrank(BigRank(r), shaper.domain_table());
    const auto y = shaper.shape(x);
    std::uint64_t code = 0;
    for (std::uint32_t i = 0; i < len; ++i) code += y[i] * place[i];
    images.push_back(code);
    strings.emplace_back(y.symbols().begin(), y.symbols().end());
  }
  const std::unordered_set<std::uint64_t> members(images.begin(),
                                                  images.end());

  std::uint64_t detected = 0;
  std::uint64_t cases = 0;
  std::vector<std::uint32_t> chosen;
  // Recursively choose increasing positions, then every replacement symbol.
  auto visit = [&](auto&& self, const std::vector<Symbol>& y,
                   std::uint64_t code, std::uint32_t from) -> void {
    if (chosen.size() == errors) {
      ++cases;
      detected += members.count(code) == 0;
      return;
    }
    for (std::uint32_t i = from; i < len; ++i) {
      chosen.push_back(i);
      for (Symbol a = 0; a < m; ++a) {
        if (a == y[i]) continue;
        const std::uint64_t moved = code - y[i] * place[i] + a * place[i];
        self(self, y, moved, i + 1);
      }
      chosen.pop_back();
    }
  };
  for (std::size_t j = 0; j < strings.size(); ++j)
    visit(visit, strings[j], images[j], 0);
  return static_cast<double>(detected) / static_cast<double>(cases);
}

}  // namespace sst

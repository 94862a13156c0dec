#include "sst/analysis.hpp"

#include <cmath>

#include "parallel.hpp"
#include "sst/errors.hpp"
#include "sst/rng.hpp"

namespace sst {

namespace {

// count / total without leaving double range for large n.
double ratio(const BigRank& count, const BigRank& total) {
  return std::exp2(log2_big(count) - log2_big(total));
}

constexpr std::uint64_t kAnalysisStream = 0x414e414c59534953ULL;  // "ANALYSIS"

}  // namespace

InfoBits average_info_unshaped(std::uint32_t m, std::uint32_t n,
                               ClassTableCache& cache) {
  const auto table = cache.get(n, m);
  double mean = 0.0;
  for (const auto& e : table->entries())
    mean += ratio(e.count, table->total()) * e.info.value();
  return InfoBits(mean);
}

InfoBits average_info_shaped(const ShapingParams& p, ClassTableCache& cache) {
  if (p.order == 0) return average_info_unshaped(p.alphabet_size,
                                                 p.base_length, cache);
  const auto table = cache.get(p.shaped_length(), p.alphabet_size);
  const BigRank domain = power(p.alphabet_size, p.base_length);
  BigRank budget = domain;
  double mean = 0.0;
  for (const auto& e : table->entries()) {
    // Every string in a class shares its information content, so a partially
    // used class at the boundary contributes pro rata.
    const BigRank& take = e.count < budget ? e.count : budget;
    mean += ratio(take, domain) * e.info.value();
    budget -= take;
    if (budget == 0) break;
  }
  return InfoBits(mean);
}

std::vector<ShapingRow> shaping_table(std::uint32_t m, std::uint32_t n,
                                      std::uint32_t k_max,
                                      ClassTableCache& cache) {
  std::vector<ShapingRow> rows;
  rows.reserve(k_max + 1);
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    ShapingParams p(m, n, k);
    rows.push_back({k, p.shaped_length(), average_info_shaped(p, cache)});
  }
  return rows;
}

Estimate summarize(const std::vector<double>& samples) {
  Estimate est;
  est.trials = samples.size();
  if (samples.empty()) return est;
  double sum = 0.0;
  for (double v : samples) sum += v;
  est.mean = sum / samples.size();
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double v : samples) ss += (v - est.mean) * (v - est.mean);
    est.std_error = std::sqrt(ss / (samples.size() - 1) / samples.size());
  }
  return est;
}

Estimate average_info_shaped_nonuniform(const ShapingParams& p,
                                        const SourceEnsemble& src,
                                        std::uint64_t trials,
                                        std::uint64_t seed,
                                        ClassTableCache& cache,
                                        unsigned threads) {
  if (src.alphabet().size() != p.alphabet_size)
    throw InvalidArgument("source alphabet does not match shaping params");
  if (trials == 0) throw InvalidArgument("trials must be positive");
  const Shaper shaper(p, cache);
  std::vector<double> samples(trials);
  detail::parallel_for(trials, threads, [&](std::uint64_t i) {
    TrialRng rng(seed, kAnalysisStream, i);
    const auto x = sample_string(src, p.base_length, rng);
    samples[i] = composition_info(composition_of(shaper.shape(x))).value();
  });
  return summarize(samples);
}

}  // namespace sst

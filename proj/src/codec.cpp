#include "sst/codec.hpp"

#include <cmath>
#include <string>

#include "parallel.hpp"
#include "sst/errors.hpp"
#include "sst/rng.hpp"

namespace sst {

namespace {

// Coder registers hold kPrecision bits; low carries into bit kPrecision.
constexpr int kPrecision = 62;
constexpr std::uint64_t kTop = std::uint64_t{1} << kPrecision;
constexpr std::uint64_t kHalf = kTop >> 1;
constexpr std::uint64_t kMask = kTop - 1;
// Keeps range/total >= 2^21 so truncation loss stays negligible.
constexpr std::uint64_t kMaxTotal = std::uint64_t{1} << 40;

constexpr std::uint64_t kCodecStream = 0x434f444543ULL;  // "CODEC"

class AdaptiveModel {
 public:
  explicit AdaptiveModel(const CodecModelConfig& cfg)
      : alpha_(cfg.alpha_units()),
        counts_(cfg.alphabet_size(), 0),
        total_(cfg.alpha_units() * cfg.alphabet_size()) {}

  std::uint32_t size() const noexcept {
    return static_cast<std::uint32_t>(counts_.size());
  }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t freq(Symbol a) const noexcept {
    return counts_[a] * CodecModelConfig::kAlphaScale + alpha_;
  }
  std::uint64_t cumulative(Symbol a) const noexcept {
    std::uint64_t c = 0;
    for (Symbol b = 0; b < a; ++b) c += freq(b);
    return c;
  }
  void update(Symbol a) {
    ++counts_[a];
    total_ += CodecModelConfig::kAlphaScale;
    if (total_ > kMaxTotal)
      throw InvalidArgument("string too long for the coder's precision");
  }

 private:
  std::uint64_t alpha_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_;
};

class Encoder {
 public:
  void encode(std::uint64_t cum, std::uint64_t freq, std::uint64_t total,
              bool last) {
    const std::uint64_t r = range_ / total;
    low_ += r * cum;
    // The last symbol absorbs the truncation remainder.
    range_ = last ? range_ - r * cum : r * freq;
    if (low_ >= kTop) {
      propagate_carry();
      low_ -= kTop;
    }
    while (range_ <= kHalf) {
      out_.push_back(static_cast<std::uint8_t>(low_ >> (kPrecision - 1)));
      low_ = (low_ << 1) & kMask;
      range_ <<= 1;
    }
  }

  /// Emits the fewest bits (0 or 1) that pin a value inside [low, low+range)
  /// when followed by zeros.
  BitSequence finish() && {
    if (low_ == 0) return std::move(out_);
    if (range_ > kTop - low_) {
      propagate_carry();
      return std::move(out_);
    }
    out_.push_back(1);
    return std::move(out_);
  }

 private:
  void propagate_carry() {
    std::size_t i = out_.size();
    while (i > 0 && out_[i - 1] == 1) out_[--i] = 0;
    if (i == 0) throw std::logic_error("arithmetic coder carry overflow");
    out_[i - 1] = 1;
  }

  std::uint64_t low_ = 0;
  std::uint64_t range_ = kTop;
  BitSequence out_;
};

class Decoder {
 public:
  explicit Decoder(std::span<const std::uint8_t> bits) : bits_(bits) {
    for (int i = 0; i < kPrecision; ++i) value_ = (value_ << 1) | next_bit();
  }

  Symbol decode(const AdaptiveModel& model) {
    const std::uint64_t total = model.total();
    const std::uint64_t r = range_ / total;
    std::uint64_t target = value_ / r;
    if (target >= total) target = total - 1;
    const Symbol last = model.size() - 1;
    Symbol a = 0;
    std::uint64_t cum = 0;
    for (; a < last; ++a) {
      const std::uint64_t f = model.freq(a);
      if (target < cum + f) break;
      cum += f;
    }
    value_ -= r * cum;
    range_ = a == last ? range_ - r * cum : r * model.freq(a);
    if (value_ >= range_)
      throw MalformedBitstream("arithmetic decode range violated");
    while (range_ <= kHalf) {
      value_ = (value_ << 1) | next_bit();
      range_ <<= 1;
    }
    return a;
  }

 private:
  std::uint64_t next_bit() {
    if (pos_ >= bits_.size()) return 0;
    const std::uint8_t b = bits_[pos_++];
    if (b > 1) throw MalformedBitstream("bit sequence holds a non-bit value");
    return b;
  }

  std::span<const std::uint8_t> bits_;
  std::size_t pos_ = 0;
  std::uint64_t value_ = 0;
  std::uint64_t range_ = kTop;
};

}  // namespace

CodecModelConfig::CodecModelConfig(std::uint32_t alphabet_size, double alpha)
    : m_(alphabet_size) {
  if (alphabet_size < 2) throw InvalidArgument("alphabet size must be >= 2");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw InvalidArgument("smoothing constant must be positive");
  const double units = std::round(alpha * kAlphaScale);
  if (units < 1.0 || units > 1e9)
    throw InvalidArgument("smoothing constant out of representable range");
  alpha_units_ = static_cast<std::uint64_t>(units);
}

BitSequence encode(const SymbolString& s, const CodecModelConfig& cfg) {
  if (s.alphabet_size() != cfg.alphabet_size())
    throw InvalidArgument("string alphabet does not match codec config");
  AdaptiveModel model(cfg);
  Encoder enc;
  const Symbol last = model.size() - 1;
  for (Symbol a : s.symbols()) {
    enc.encode(model.cumulative(a), model.freq(a), model.total(), a == last);
    model.update(a);
  }
  return std::move(enc).finish();
}

SymbolString decode(std::span<const std::uint8_t> bits, std::uint32_t n,
                    const CodecModelConfig& cfg) {
  if (n == 0) throw InvalidArgument("decoded length must be >= 1");
  AdaptiveModel model(cfg);
  Decoder dec(bits);
  std::vector<Symbol> out;
  out.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Symbol a = dec.decode(model);
    out.push_back(a);
    model.update(a);
  }
  return SymbolString(Alphabet(cfg.alphabet_size()), std::move(out));
}

InfoBits ideal_code_length(const SymbolString& s, const CodecModelConfig& cfg) {
  if (s.alphabet_size() != cfg.alphabet_size())
    throw InvalidArgument("string alphabet does not match codec config");
  AdaptiveModel model(cfg);
  long double bits = 0.0L;
  for (Symbol a : s.symbols()) {
    bits += std::log2(static_cast<long double>(model.total()) /
                      static_cast<long double>(model.freq(a)));
    model.update(a);
  }
  return InfoBits(static_cast<double>(bits));
}

std::vector<std::uint8_t> pack_bits(const BitSequence& bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  return bytes;
}

BitSequence unpack_bits(std::span<const std::uint8_t> bytes) {
  BitSequence bits(bytes.size() * 8);
  for (std::size_t i = 0; i < bits.size(); ++i)
    bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1u;
  return bits;
}

std::vector<std::uint8_t> write_bitstream(const SymbolString& s,
                                          const CodecModelConfig& cfg) {
  if (cfg.alphabet_size() > 255)
    throw InvalidArgument("bitstream header holds alphabets up to 255");
  if (s.size() > UINT32_MAX) throw InvalidArgument("string too long");
  const auto n = static_cast<std::uint32_t>(s.size());
  std::vector<std::uint8_t> out{kBitstreamVersion,
                                static_cast<std::uint8_t>(n >> 24),
                                static_cast<std::uint8_t>(n >> 16),
                                static_cast<std::uint8_t>(n >> 8),
                                static_cast<std::uint8_t>(n),
                                static_cast<std::uint8_t>(cfg.alphabet_size())};
  const auto payload = pack_bits(encode(s, cfg));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

SymbolString read_bitstream(std::span<const std::uint8_t> bytes,
                            double alpha) {
  if (bytes.size() < 6) throw MalformedBitstream("truncated header");
  if (bytes[0] != kBitstreamVersion)
    throw MalformedBitstream("unsupported bitstream version " +
                             std::to_string(bytes[0]));
  const std::uint32_t n = (std::uint32_t{bytes[1]} << 24) |
                          (std::uint32_t{bytes[2]} << 16) |
                          (std::uint32_t{bytes[3]} << 8) | bytes[4];
  const std::uint32_t m = bytes[5];
  if (n == 0) throw MalformedBitstream("empty symbol count");
  if (m < 2) throw MalformedBitstream("alphabet size below 2");
  const auto bits = unpack_bits(bytes.subspan(6));
  return decode(bits, n, CodecModelConfig(m, alpha));
}

BenchReport run_codec_benchmark(const ShapingParams& p,
                                const SourceEnsemble& src,
                                std::uint64_t trials, std::uint64_t seed,
                                double alpha, ClassTableCache& cache,
                                unsigned threads) {
  if (src.alphabet().size() != p.alphabet_size)
    throw InvalidArgument("source alphabet does not match shaping params");
  if (trials == 0) throw InvalidArgument("trials must be positive");
  const CodecModelConfig cfg(p.alphabet_size, alpha);
  const Shaper shaper(p, cache);

  std::vector<double> raw_bits(trials), raw_ideal(trials);
  std::vector<double> shaped_bits(trials), shaped_ideal(trials);
  detail::parallel_for(trials, threads, [&](std::uint64_t i) {
    TrialRng rng(seed, kCodecStream, i);
    const auto x = sample_string(src, p.base_length, rng);
    const auto y = shaper.shape(x);
    raw_bits[i] = static_cast<double>(encode(x, cfg).size());
    raw_ideal[i] = ideal_code_length(x, cfg).value();
    shaped_bits[i] = static_cast<double>(encode(y, cfg).size());
    shaped_ideal[i] = ideal_code_length(y, cfg).value();
  });

  std::vector<double> diff(trials);
  for (std::uint64_t i = 0; i < trials; ++i)
    diff[i] = shaped_ideal[i] - raw_ideal[i];

  BenchReport report;
  report.alphabet_size = p.alphabet_size;
  report.base_length = p.base_length;
  report.order = p.order;
  report.source.assign(src.probs().begin(), src.probs().end());
  report.alpha = cfg.alpha();
  report.seed = seed;
  report.trials = trials;
  report.raw = {summarize(raw_bits), summarize(raw_ideal)};
  report.shaped = {summarize(shaped_bits), summarize(shaped_ideal)};
  report.ideal_difference = summarize(diff);
  return report;
}

}  // namespace sst

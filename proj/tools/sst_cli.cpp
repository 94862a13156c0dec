// sst: command-line driver for shaping, analysis, codec and testability runs.
//
// Exit codes: 0 success, 1 detection events during unshape, 2 invalid flags
// or input, 3 class table capacity exceeded.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sst/analysis.hpp"
#include "sst/codec.hpp"
#include "sst/errors.hpp"
#include "sst/report.hpp"
#include "sst/shaping.hpp"
#include "sst/testability.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDetected = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCapacity = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t composition_cap() {
  const char* env = std::getenv("SST_COMPOSITION_CAP");
  if (!env || !*env) return sst::kDefaultCompositionCap;
  try {
    std::size_t used = 0;
    const auto cap = std::stoull(env, &used);
    if (used != std::string(env).size() || cap == 0) throw std::exception();
    return cap;
  } catch (...) {
    throw UsageError(std::string("invalid SST_COMPOSITION_CAP: ") + env);
  }
}

sst::ReportFormat parse_format(const std::string& f) {
  return f == "json" ? sst::ReportFormat::Json : sst::ReportFormat::Csv;
}

sst::SourceEnsemble parse_source(const std::string& text, std::uint32_t m) {
  const sst::Alphabet alphabet(m);
  if (text.empty()) return sst::SourceEnsemble::uniform(alphabet);
  std::vector<double> probs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      probs.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::exception();
    } catch (...) {
      throw UsageError("malformed probability '" + item + "'");
    }
  }
  if (probs.size() != m)
    throw UsageError("--source needs " + std::to_string(m) + " probabilities");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw UsageError("probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw UsageError("probabilities must sum to 1 (got " +
                     sst::format6(total) + ")");
  for (double& p : probs) p /= total;
  return sst::SourceEnsemble(alphabet, std::move(probs));
}

sst::SymbolString parse_line(const std::string& line, std::uint32_t m) {
  const sst::Alphabet alphabet(m);
  if (m <= 10) return sst::SymbolString::from_digits(alphabet, line);
  std::vector<sst::Symbol> symbols;
  std::stringstream in(line);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() ||
        item.find_first_not_of("0123456789") != std::string::npos)
      throw sst::InvalidArgument("invalid symbol '" + item + "'");
    symbols.push_back(static_cast<sst::Symbol>(std::stoul(item)));
  }
  return sst::SymbolString(alphabet, std::move(symbols));
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open " + path);
    in = &file;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Options {
  std::uint32_t alphabet = 0;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t k_max = 0;
  std::vector<std::uint32_t> k_list;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string source;
  std::uint32_t errors = 1;
  std::optional<double> error_prob;
  std::optional<std::uint32_t> burst;
  double alpha = 1.0;
  unsigned threads = 0;
  std::string format = "csv";
  std::string in;
  std::string out;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set shaping toolkit: shaping transform, analysis, codec and "
               "error-detection experiments"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Output path (default stdout)");
  };
  auto alphabet_opt = [&](CLI::App* sub) {
    sub->add_option("--alphabet", o.alphabet, "Alphabet size m")
        ->required()
        ->check(CLI::Range(2u, 1u << 20));
  };

  auto* analyze = app.add_subcommand(
      "analyze", "Average information content of the shaped set per K");
  alphabet_opt(analyze);
  analyze->add_option("--n", o.n, "Base length N")->required()
      ->check(CLI::PositiveNumber);
  analyze->add_option("--k-max", o.k_max, "Largest shaping order")
      ->required();
  add_format(analyze);

  auto* shape_cmd = app.add_subcommand(
      "shape", "Shape each input line (length N) to length N+K");
  auto* unshape_cmd = app.add_subcommand(
      "unshape", "Invert shaping; non-members are reported as ERROR:<line>");
  for (auto* sub : {shape_cmd, unshape_cmd}) {
    alphabet_opt(sub);
    sub->add_option("--k", o.k, "Shaping order K")->required();
    sub->add_option("--in,input", o.in, "Input file (default stdin)");
    sub->add_option("--out", o.out, "Output path (default stdout)");
  }

  auto* bench = app.add_subcommand(
      "codec-bench", "Adaptive arithmetic coding of raw vs shaped strings");
  alphabet_opt(bench);
  bench->add_option("--n", o.n, "Base length N")->required()
      ->check(CLI::PositiveNumber);
  bench->add_option("--k", o.k, "Shaping order K")->required();
  bench->add_option("--alpha", o.alpha, "Additive smoothing constant")
      ->check(CLI::PositiveNumber);

  auto* test = app.add_subcommand(
      "testability", "Monte Carlo error detection by shaped-set membership");
  alphabet_opt(test);
  test->add_option("--n", o.n, "Base length N")->required()
      ->check(CLI::PositiveNumber);
  test->add_option("--k-list", o.k_list, "Shaping orders")
      ->required()
      ->delimiter(',');
  auto* errors_opt =
      test->add_option("--errors", o.errors, "Exact substitutions per message");
  auto* prob_opt = test->add_option("--error-prob", o.error_prob,
                                    "Per-symbol substitution probability")
                       ->check(CLI::Range(0.0, 1.0));
  auto* burst_opt =
      test->add_option("--burst", o.burst, "Burst length (window redrawn)");
  errors_opt->excludes(prob_opt)->excludes(burst_opt);
  prob_opt->excludes(burst_opt);

  for (auto* sub : {bench, test}) {
    sub->add_option("--trials", o.trials, "Monte Carlo trials")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Base seed")->required();
    sub->add_option("--source", o.source,
                    "Source probabilities p1,p2,... (default uniform)");
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    add_format(sub);
  }

  auto* encode_cmd = app.add_subcommand(
      "encode", "Arithmetic-code the first input line into a bitstream file");
  alphabet_opt(encode_cmd);
  encode_cmd->add_option("--in,input", o.in, "Input text file (default stdin)");
  encode_cmd->add_option("--out", o.out, "Bitstream path")->required();
  encode_cmd->add_option("--alpha", o.alpha, "Additive smoothing constant")
      ->check(CLI::PositiveNumber);

  auto* decode_cmd =
      app.add_subcommand("decode", "Decode a bitstream file to a text line");
  decode_cmd->add_option("--in,input", o.in, "Bitstream path")->required();
  decode_cmd->add_option("--out", o.out, "Output path (default stdout)");
  decode_cmd->add_option("--alpha", o.alpha, "Additive smoothing constant")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitInvalid;
  }

  try {
    sst::ClassTableCache cache(composition_cap());
    const auto format = parse_format(o.format);

    if (*analyze) {
      const auto rows = sst::shaping_table(o.alphabet, o.n, o.k_max, cache);
      write_output(o.out, sst::render_shaping_table(o.alphabet, o.n, rows,
                                                    format));
      return kExitOk;
    }

    if (*shape_cmd || *unshape_cmd) {
      const bool forward = shape_cmd->parsed();
      const auto lines = read_lines(o.in);
      std::string text;
      bool any_error = false;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto s = parse_line(lines[i], o.alphabet);
        const auto len = static_cast<std::uint32_t>(s.size());
        if (forward) {
          const sst::Shaper shaper(sst::ShapingParams(o.alphabet, len, o.k),
                                   cache);
          text += shaper.shape(s).to_text();
        } else {
          if (len <= o.k)
            throw sst::InvalidArgument("line " + std::to_string(i + 1) +
                                       " is not longer than K");
          const sst::Shaper shaper(
              sst::ShapingParams(o.alphabet, len - o.k, o.k), cache);
          if (shaper.contains(s)) {
            text += shaper.unshape(s).to_text();
          } else {
            text += "ERROR:" + std::to_string(i + 1);
            any_error = true;
          }
        }
        text += '\n';
      }
      write_output(o.out, text);
      return any_error ? kExitDetected : kExitOk;
    }

    if (*bench) {
      const auto src = parse_source(o.source, o.alphabet);
      const auto report = sst::run_codec_benchmark(
          sst::ShapingParams(o.alphabet, o.n, o.k), src, o.trials, o.seed,
          o.alpha, cache, o.threads);
      write_output(o.out, sst::render_bench_report(report, format));
      return kExitOk;
    }

    if (*test) {
      const auto src = parse_source(o.source, o.alphabet);
      const auto em =
          o.error_prob ? sst::ErrorModel::random_substitutions(*o.error_prob)
          : o.burst    ? sst::ErrorModel::burst(*o.burst)
                       : sst::ErrorModel::exact_substitutions(o.errors);
      const auto report = sst::run_detection_experiment(
          o.alphabet, o.n, o.k_list, src, em, o.trials, o.seed, cache,
          o.threads);
      write_output(o.out, sst::render_detection_report(report, format));
      return kExitOk;
    }

    if (*encode_cmd) {
      const auto lines = read_lines(o.in);
      if (lines.empty()) throw UsageError("no input string");
      const auto s = parse_line(lines.front(), o.alphabet);
      const auto bytes =
          sst::write_bitstream(s, sst::CodecModelConfig(o.alphabet, o.alpha));
      std::ofstream out(o.out, std::ios::binary);
      if (!out) throw UsageError("cannot write " + o.out);
      out.write(reinterpret_cast<const char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
      return kExitOk;
    }

    if (*decode_cmd) {
      const auto s = sst::read_bitstream(read_bytes(o.in), o.alpha);
      write_output(o.out, s.to_text() + "\n");
      return kExitOk;
    }
  } catch (const sst::CapacityExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const sst::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

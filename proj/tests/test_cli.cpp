#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sst/rng.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = SST_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("sst_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const {
    return (path / name).string();
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + kCli + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("analyze reproduces the reference table") {
  TempDir dir;
  REQUIRE(run("analyze --alphabet 3 --n 10 --k-max 7 --out " + dir / "t.csv") ==
          0);
  const double expected[] = {14.263, 14.136, 14.006, 13.694,
                             13.322, 13.612, 13.809, 13.969};
  const auto rows = csv_rows(slurp(dir / "t.csv"));
  REQUIRE(rows.size() == 8);
  for (int k = 0; k < 8; ++k) {
    CHECK(std::stoi(rows[k][0]) == k);
    CHECK(std::stoi(rows[k][1]) == 10 + k);
    CHECK(std::abs(std::stod(rows[k][2]) - expected[k]) <= 0.005);
  }

  REQUIRE(run("analyze --alphabet 3 --n 10 --k-max 7 --format json --out " +
              dir / "t.json") == 0);
  const auto j = nlohmann::json::parse(slurp(dir / "t.json"));
  REQUIRE(j["rows"].size() == 8);
  for (int k = 0; k < 8; ++k)
    CHECK(j["rows"][k]["info_bits"].get<double>() == std::stod(rows[k][2]));
}

TEST_CASE("analyze small case and errors") {
  TempDir dir;
  REQUIRE(run("analyze --alphabet 2 --n 1 --k-max 1 --out " + dir / "t.csv") ==
          0);
  const auto rows = csv_rows(slurp(dir / "t.csv"));
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[0][2]) == 0.0);
  CHECK(std::stod(rows[1][2]) == 0.0);
  CHECK(run("analyze --alphabet 3 --k-max 7") == 2);
  CHECK(run("analyze --alphabet 1 --n 3 --k-max 1") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("analyze --alphabet 3 --n 10 --k-max 2", "SST_COMPOSITION_CAP=10") ==
        3);
  CHECK(run("analyze --alphabet 16 --n 120 --k-max 0") == 3);
}

TEST_CASE("shape and unshape round trip through files") {
  TempDir dir;
  sst::TrialRng rng(1234);
  std::string input;
  for (int i = 0; i < 100; ++i) {
    const auto len = 1 + rng.below(12);
    for (std::uint64_t j = 0; j < len; ++j)
      input.push_back(static_cast<char>('0' + rng.below(3)));
    input.push_back('\n');
  }
  spit(dir / "in.txt", input);
  REQUIRE(run("shape --alphabet 3 --k 3 --in " + dir / "in.txt" + " --out " +
              dir / "shaped.txt") == 0);
  REQUIRE(run("unshape --alphabet 3 --k 3 " + dir / "shaped.txt" + " --out " +
              dir / "back.txt") == 0);
  CHECK(slurp(dir / "back.txt") == input);

  REQUIRE(run("shape --alphabet 3 --k 0 --in " + dir / "in.txt" + " --out " +
              dir / "same.txt") == 0);
  CHECK(slurp(dir / "same.txt") == input);
}

TEST_CASE("unshape flags non-members") {
  TempDir dir;
  spit(dir / "y.txt", "00\n01\n11\n");
  CHECK(run("unshape --alphabet 2 --k 1 --in " + dir / "y.txt" + " --out " +
            dir / "x.txt") == 1);
  CHECK(slurp(dir / "x.txt") == "0\nERROR:2\n1\n");

  spit(dir / "bad.txt", "0130\n");
  CHECK(run("shape --alphabet 3 --k 1 --in " + dir / "bad.txt") == 2);
  spit(dir / "short.txt", "0\n");
  CHECK(run("unshape --alphabet 2 --k 1 --in " + dir / "short.txt") == 2);
}

TEST_CASE("large alphabets use comma-separated symbols") {
  TempDir dir;
  spit(dir / "in.txt", "11,0,3\n2,2\n");
  REQUIRE(run("shape --alphabet 12 --k 1 --in " + dir / "in.txt" + " --out " +
              dir / "s.txt") == 0);
  REQUIRE(run("unshape --alphabet 12 --k 1 --in " + dir / "s.txt" + " --out " +
              dir / "b.txt") == 0);
  CHECK(slurp(dir / "b.txt") == "11,0,3\n2,2\n");
}

TEST_CASE("testability runs are deterministic and formats agree") {
  TempDir dir;
  const std::string args =
      "testability --alphabet 3 --n 20 --k-list 1,2,3,4,5 --errors 1 "
      "--trials 10000 --seed 42";
  REQUIRE(run(args + " --out " + dir / "a.csv") == 0);
  REQUIRE(run(args + " --out " + dir / "b.csv") == 0);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  REQUIRE(run(args + " --format json --out " + dir / "a.json") == 0);
  REQUIRE(run(args + " --format json --out " + dir / "b.json") == 0);
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));

  const auto rows = csv_rows(slurp(dir / "a.csv"));
  const auto j = nlohmann::json::parse(slurp(dir / "a.json"));
  REQUIRE(rows.size() == 5);
  REQUIRE(j["rows"].size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = j["rows"][i];
    CHECK(r["k"].get<int>() == std::stoi(rows[i][0]));
    CHECK(r["trials"].get<long>() == std::stol(rows[i][1]));
    CHECK(r["detected"].get<long>() == std::stol(rows[i][2]));
    CHECK(r["rate"].get<double>() == std::stod(rows[i][3]));
    CHECK(r["ci_low"].get<double>() == std::stod(rows[i][4]));
    CHECK(r["ci_high"].get<double>() == std::stod(rows[i][5]));
  }
  CHECK(j["config"]["seed"].get<int>() == 42);
}

TEST_CASE("testability exact binary case and flag validation") {
  TempDir dir;
  REQUIRE(run("testability --alphabet 2 --n 1 --k-list 1 --errors 1 "
              "--trials 1000 --seed 7 --out " +
              dir / "r.csv") == 0);
  const auto rows = csv_rows(slurp(dir / "r.csv"));
  REQUIRE(rows.size() == 1);
  CHECK(std::stod(rows[0][3]) == 1.0);

  CHECK(run("testability --alphabet 3 --n 5 --k-list 1 --trials 10 --seed 1 "
            "--source 0.5,0.3,0.1") == 2);
  CHECK(run("testability --alphabet 3 --n 5 --k-list 1 --trials 10 --seed 1 "
            "--source 0.5,0.5") == 2);
  CHECK(run("testability --alphabet 3 --n 5 --k-list 1 --trials 10 --seed 1 "
            "--source 0.5,x,0.5") == 2);
  CHECK(run("testability --alphabet 3 --n 5 --k-list 1 --trials 10 --seed 1 "
            "--source 0.5,0.3,0.2 --burst 2") == 0);
  CHECK(run("testability --alphabet 3 --n 5 --k-list 1 --trials 10 --seed 1 "
            "--errors 9") == 2);
}

TEST_CASE("codec benchmark via the CLI") {
  TempDir dir;
  const std::string args =
      "codec-bench --alphabet 3 --n 10 --k 0 --trials 500 --seed 3";
  REQUIRE(run(args + " --out " + dir / "a.csv") == 0);
  const auto rows = csv_rows(slurp(dir / "a.csv"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][0] == "raw");
  CHECK(rows[1][0] == "shaped");
  for (std::size_t c = 1; c < rows[0].size(); ++c)
    CHECK(rows[0][c] == rows[1][c]);

  const std::string k4 =
      "codec-bench --alphabet 3 --n 10 --k 4 --trials 300 --seed 3";
  REQUIRE(run(k4 + " --format json --out " + dir / "b.json") == 0);
  REQUIRE(run(k4 + " --format json --out " + dir / "c.json") == 0);
  CHECK(slurp(dir / "b.json") == slurp(dir / "c.json"));
}

TEST_CASE("encode and decode bitstream files") {
  TempDir dir;
  spit(dir / "s.txt", "0120221100012\n");
  REQUIRE(run("encode --alphabet 3 --in " + dir / "s.txt" + " --out " +
              dir / "s.bin") == 0);
  const auto bytes = slurp(dir / "s.bin");
  REQUIRE(bytes.size() >= 6);
  CHECK(bytes[0] == 1);
  CHECK(static_cast<unsigned char>(bytes[4]) == 13);
  CHECK(bytes[5] == 3);
  REQUIRE(run("decode --in " + dir / "s.bin" + " --out " + dir / "d.txt") == 0);
  CHECK(slurp(dir / "d.txt") == "0120221100012\n");

  spit(dir / "junk.bin", std::string("\x07\x00", 2));
  CHECK(run("decode --in " + dir / "junk.bin") == 2);
}

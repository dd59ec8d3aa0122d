#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "tsboot/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = TSBOOT_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tsboot_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("simulate emits a series file that round-trips exactly") {
  TempDir tmp;
  const fs::path out = tmp.path / "series.txt";
  REQUIRE(run("simulate --dgp arma --phi 0.5 --theta '' --n 64 --seed 99 --out " + out.string()) == 0);

  const tsboot::Series s = tsboot::read_series_file(out);
  CHECK(s.size() == 64);

  const fs::path copy = tmp.path / "copy.txt";
  tsboot::write_series_file(copy, s, {});
  const tsboot::Series s2 = tsboot::read_series_file(copy);
  REQUIRE(s2.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == s2[i]);
}

TEST_CASE("bound output is deterministic for a fixed seed") {
  TempDir tmp;
  const fs::path series = tmp.path / "series.txt";
  REQUIRE(run("simulate --dgp ararch --n 200 --seed 5 --out " + series.string()) == 0);

  const fs::path out1 = tmp.path / "b1.csv";
  const fs::path out2 = tmp.path / "b2.csv";
  const std::string args = "bound --input " + series.string() + " --d 2 --B 100 --alpha 0.1 --seed 7 --out ";
  REQUIRE(run(args + out1.string()) == 0);
  REQUIRE(run(args + out2.string()) == 0);
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("seed comes from the environment when the flag is absent") {
  TempDir tmp;
  const fs::path a = tmp.path / "a.txt";
  const fs::path b = tmp.path / "b.txt";
  REQUIRE(run("simulate --dgp arma --n 32 --seed 1234 --out " + a.string()) == 0);
  const std::string env_cmd = "TSBOOT_SEED=1234 " + kCli + " simulate --dgp arma --n 32 --out " +
                              b.string() + " >/dev/null 2>/dev/null";
  REQUIRE(WEXITSTATUS(std::system(env_cmd.c_str())) == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("bound --B 10") == 2);                       // missing --d
  CHECK(run("frobnicate") == 2);                         // unknown subcommand
  CHECK(run("cv --d 2 --k 1 --dgp arma --n 100") == 2);  // k < 2
  CHECK(run("bound --d 2") == 2);                        // neither --input nor --dgp
  CHECK(run("bound --d 2 --input /dev/null --dgp arma") == 2);  // both sources
  CHECK(run("simulate --dgp ararch --alpha1 3.9 --n 10 --out /dev/null") == 2);  // bad spec
}

TEST_CASE("data errors exit with code 3 and name the line") {
  TempDir tmp;
  const fs::path bad = tmp.path / "bad.txt";
  std::ofstream(bad) << "1.0\n2.0\nnot-a-number\n";
  CHECK(run("bound --input " + bad.string() + " --d 2") == 3);
  CHECK(run("bound --input " + (tmp.path / "missing.txt").string() + " --d 2") == 3);

  const std::string cmd = kCli + " bound --input " + bad.string() + " --d 2 2>" +
                          (tmp.path / "err.txt").string();
  const int rc = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(rc) == 3);
  const std::string err = slurp(tmp.path / "err.txt");
  CHECK(err.find(":3:") != std::string::npos);
}

TEST_CASE("numerical degeneracy exits with code 4") {
  TempDir tmp;
  const fs::path flat = tmp.path / "flat.txt";
  std::ofstream out(flat);
  for (int i = 0; i < 40; ++i) out << "2.5\n";
  out.close();
  CHECK(run("bound --input " + flat.string() + " --d 3 --B 10 --ell 2") == 4);
}

TEST_CASE("config file supplies options and rejects unknown keys") {
  TempDir tmp;
  const fs::path series = tmp.path / "series.txt";
  REQUIRE(run("simulate --dgp arma --n 128 --seed 3 --out " + series.string()) == 0);

  const fs::path cfg = tmp.path / "run.ini";
  std::ofstream(cfg) << "[bound]\ninput=" << series.string() << "\nd=2\nB=50\nseed=11\n";
  const fs::path out1 = tmp.path / "c1.csv";
  REQUIRE(run("--config " + cfg.string() + " bound --out " + out1.string()) == 0);

  // Flags override config values: an explicit seed equal to the config's
  // must reproduce the same bytes, a different one must not.
  const fs::path out2 = tmp.path / "c2.csv";
  REQUIRE(run("--config " + cfg.string() + " bound --seed 11 --out " + out2.string()) == 0);
  CHECK(slurp(out1) == slurp(out2));
  const fs::path out3 = tmp.path / "c3.csv";
  REQUIRE(run("--config " + cfg.string() + " bound --seed 12 --out " + out3.string()) == 0);
  CHECK(slurp(out1) != slurp(out3));

  const fs::path badcfg = tmp.path / "bad.ini";
  std::ofstream(badcfg) << "[bound]\nd=2\nnot_an_option=1\n";
  CHECK(run("--config " + badcfg.string() + " bound --input " + series.string()) == 2);
}

TEST_CASE("cv subcommand prints a risk and blocklength prints an integer") {
  TempDir tmp;
  const fs::path series = tmp.path / "series.txt";
  REQUIRE(run("simulate --dgp arma --phi 0.6 --theta '' --n 400 --seed 21 --out " + series.string()) == 0);
  CHECK(run("cv --input " + series.string() + " --d 3 --k 5") == 0);
  CHECK(run("blocklength --input " + series.string()) == 0);
  CHECK(run("blocklength --dgp arma --n 5") == 2);  // too short
}

TEST_CASE("coverage CSV is byte-identical across runs and thread counts") {
  TempDir tmp;
  const std::string base =
      "coverage --dgp arma --phi 0.5 --theta '' --d 2 --sizes 60,90 --n-outer 12 --B 25 "
      "--alpha 0.1 --oracle-horizon 150 --burnin 100 --seed 31 --out ";
  const fs::path a = tmp.path / "a.csv";
  const fs::path b = tmp.path / "b.csv";
  const fs::path c = tmp.path / "c.csv";
  REQUIRE(run(base + a.string() + " --threads 1") == 0);
  REQUIRE(run(base + b.string() + " --threads 4") == 0);
  REQUIRE(run(base + c.string() + " --threads 4") == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(b) == slurp(c));
}

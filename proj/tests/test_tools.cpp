#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pwll/errors.hpp"
#include "pwll_tools/commands.hpp"
#include "pwll_tools/sweep.hpp"

namespace pwll {
namespace {

namespace fs = std::filesystem;

std::string Sweep(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  sweep::run(sweep::parse(in), out);
  return out.str();
}

std::size_t Lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Sweep, CartesianProductRows) {
  const std::string csv = Sweep(
      "# comment\n"
      "bvp kind=same,opposite tau=0,1,2 length=2\n"
      "exploration beta=0.1,0.25 tau=2\n");
  EXPECT_EQ(Lines(csv), 1u + 6u + 2u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), sweep::kHeader);
  EXPECT_NE(csv.find("\n2,bvp,same,const,1,2,0,"), std::string::npos);
  EXPECT_NE(csv.find("\n3,exploration,"), std::string::npos);
}

TEST(Sweep, EmptyGivesHeaderOnly) {
  EXPECT_EQ(Sweep(""), std::string(sweep::kHeader) + "\n");
  EXPECT_EQ(Sweep("# nothing\n\n"), std::string(sweep::kHeader) + "\n");
}

TEST(Sweep, Deterministic) {
  const std::string text = "bounds r_s=2,4 tau=0.8,1.2\nmoat tau=0.5,2 s=1 length=4\n";
  EXPECT_EQ(Sweep(text), Sweep(text));
}

TEST(Sweep, RejectsMalformedInput) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      Sweep(text);
    } catch (const ConfigError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("bvp\nbvp density=wavy\n"), 2u);
  EXPECT_EQ(line_of("spline tau=1\n"), 1u);
  EXPECT_EQ(line_of("bvp tau\n"), 1u);
  EXPECT_EQ(line_of("bvp tau=1,,2\n"), 1u);
  EXPECT_EQ(line_of("bvp tau=abc\n"), 1u);
  EXPECT_EQ(line_of("bvp s=1\n"), 1u);
  EXPECT_EQ(line_of("bvp tau=1 tau=2\n"), 1u);
  EXPECT_EQ(line_of("\n\nbvp m=10\n"), 3u);
  EXPECT_EQ(line_of("bvp kind=both\n"), 1u);
}

TEST(Sweep, TrapezoidDensityChecked) {
  const std::string csv = Sweep("bvp density=trapezoid length=4 rho=1 delta=0.05 tau=1\n");
  EXPECT_EQ(Lines(csv), 2u);
}

TEST(Commands, OutputDirectoryPrecedence) {
  ::setenv("PWLL_OUT_DIR", "/tmp/from_env", 1);
  EXPECT_EQ(commands::output_directory("flag"), "flag");
  EXPECT_EQ(commands::output_directory(""), "/tmp/from_env");
  ::unsetenv("PWLL_OUT_DIR");
  EXPECT_EQ(commands::output_directory(""), "out");
}

TEST(Commands, RunWritesOneLogPerPairAndIsReproducible) {
  const fs::path dir = fs::temp_directory_path() / "pwll_run_test";
  fs::remove_all(dir);
  std::istringstream text(
      "dataset = box\nacquisitions = sm, norm, norm-decay\nseeds = 0-1\nn_queries = 4\n");
  const RunConfig cfg = parse_config(text);
  std::ostringstream log;
  commands::run(cfg, (dir / "a").string(), log);
  commands::run(cfg, (dir / "b").string(), log);
  std::size_t csvs = 0;
  for (const auto& e : fs::directory_iterator(dir / "a")) {
    if (e.path().extension() == ".csv") {
      ++csvs;
      EXPECT_EQ(Slurp(e.path()), Slurp(dir / "b" / e.path().filename())) << e.path();
      EXPECT_EQ(Lines(Slurp(e.path())), 1u + 5u);
    }
  }
  EXPECT_EQ(csvs, 6u);
  EXPECT_TRUE(fs::exists(dir / "a" / "manifest.json"));
  EXPECT_EQ(Slurp(dir / "a" / "manifest.json"), Slurp(dir / "b" / "manifest.json"));
  fs::remove_all(dir);
}

}  // namespace
}  // namespace pwll

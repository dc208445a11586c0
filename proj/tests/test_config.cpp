#include <gtest/gtest.h>

#include <sstream>

#include "pwll/config.hpp"
#include "pwll/errors.hpp"

namespace pwll {
namespace {

RunConfig Parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::size_t ErrorLine(const std::string& text) {
  try {
    Parse(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return 0;
}

TEST(Config, Defaults) {
  const RunConfig c = Parse("");
  EXPECT_EQ(c.dataset, "blobs");
  EXPECT_EQ(c.k, 10u);
  EXPECT_EQ(c.acquisitions, (std::vector<std::string>{"sm", "norm", "norm-decay"}));
  EXPECT_EQ(c.schedule.tau0, 1e4);
  EXPECT_EQ(c.schedule.K, 8u);
  EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(c.n_queries, 100u);
}

TEST(Config, ParsesKeysCommentsAndRanges) {
  const RunConfig c = Parse(
      "# experiment\n"
      "dataset = box   # lattice\n"
      "\n"
      "acquisitions = norm, random\n"
      "policy = kde\n"
      "tau = 0.5\n"
      "tau0 = 100\n"
      "K = 4\n"
      "seeds = 0-2, 7\n"
      "n_queries = 25\n"
      "initial = 3, 9\n"
      "warm_start = false\n");
  EXPECT_EQ(c.dataset, "box");
  EXPECT_EQ(c.acquisitions, (std::vector<std::string>{"norm", "random"}));
  EXPECT_EQ(c.policy, PolicyKind::kKdeFiltered);
  EXPECT_EQ(c.tau, 0.5);
  EXPECT_EQ(c.schedule.tau0, 100.0);
  EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{0, 1, 2, 7}));
  EXPECT_EQ(c.initial_rule, InitialRule::kExplicit);
  EXPECT_EQ(c.initial_labels, (std::vector<Index>{3, 9}));
  EXPECT_FALSE(c.warm_start);
  EXPECT_EQ(c.origin.at("tau"), 6u);
  EXPECT_FALSE(c.dataset_depends_on_seed());
}

TEST(Config, ExperimentSettings) {
  RunConfig c = Parse("policy = proportional\ntau = 2\n");
  const ExperimentConfig norm = c.experiment("norm", 3);
  EXPECT_EQ(norm.seed, 3u);
  EXPECT_EQ(norm.acquisition.policy, PolicyKind::kProportional);
  EXPECT_EQ(norm.acquisition.tau, 2.0);
  const ExperimentConfig rnd = c.experiment("random", 3);
  EXPECT_EQ(rnd.acquisition.policy, PolicyKind::kRandom);
}

TEST(Config, ErrorsNameTheLine) {
  EXPECT_EQ(ErrorLine("k = 10\nbogus = 1\n"), 2u);
  EXPECT_EQ(ErrorLine("\n\ntau = abc\n"), 3u);
  EXPECT_EQ(ErrorLine("seeds = 0-2\nno equals sign\n"), 2u);
  EXPECT_EQ(ErrorLine("acquisitions = entropy\n"), 1u);
  EXPECT_EQ(ErrorLine("policy = greedy\n"), 1u);
  EXPECT_EQ(ErrorLine("seeds = 5-2\n"), 1u);
}

TEST(Config, CrossKeyValidation) {
  EXPECT_EQ(ErrorLine("n_queries = 5\ntau0 = 0\n"), 2u);
  EXPECT_EQ(ErrorLine("tau0 = -3\nacquisitions = norm-decay\n"), 1u);
  // tau0 is irrelevant without the decay acquisition.
  EXPECT_NO_THROW(Parse("acquisitions = sm\ntau0 = 0\n"));
  EXPECT_EQ(ErrorLine("x=1\n"), 1u);
  EXPECT_EQ(ErrorLine("\ntau = -1\n"), 2u);
  EXPECT_EQ(ErrorLine("\n\nrelabel_k = 1\n"), 3u);
}

TEST(Config, DescribeEchoesSettings) {
  const auto d = Parse("dataset = box\nseeds = 1,2\n").describe();
  EXPECT_EQ(d.at("dataset"), "box");
  EXPECT_EQ(d.at("seeds"), "1,2");
  EXPECT_EQ(d.at("policy"), "argmax");
}

TEST(Config, LoadsDatasets) {
  RunConfig c = Parse("dataset = blobs\nrelabel_k = 2\n");
  const Dataset d = c.load_dataset_for(4);
  EXPECT_EQ(d.size(), 2400u);
  EXPECT_TRUE(c.dataset_depends_on_seed());
  EXPECT_THROW(Parse("relabel_k = 3\n").load_dataset_for(0), KTooLarge);
}

}  // namespace
}  // namespace pwll

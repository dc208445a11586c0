#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pwll/datasets.hpp"
#include "pwll/errors.hpp"
#include "pwll/feature_io.hpp"

namespace pwll {
namespace {

TEST(Csv, RoundTripWithLabels) {
  const Dataset d = gen_blobs(4);
  std::stringstream s;
  write_features_csv(d.features, d.true_labels, s);
  const FeatureTable t = read_features_csv(s, true);
  EXPECT_TRUE(t.features == d.features);
  EXPECT_EQ(t.labels, d.true_labels);
}

TEST(Csv, HeaderAndNoLabels) {
  std::istringstream in("x,y\n1.5, 2\n-3,4e-1\n");
  const FeatureTable t = read_features_csv(in, false);
  ASSERT_EQ(t.features.rows(), 2);
  EXPECT_EQ(t.features(0, 0), 1.5);
  EXPECT_EQ(t.features(1, 1), 0.4);
  EXPECT_TRUE(t.labels.empty());
}

TEST(Csv, ErrorsCarryLineNumbers) {
  std::istringstream ragged("1,2,0\n3,1\n");
  try {
    read_features_csv(ragged, true);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  std::istringstream bad("1,2,0\n3,x,1\n");
  EXPECT_THROW(read_features_csv(bad, true), FormatError);
  std::istringstream frac("1,2,0.5\n");
  EXPECT_THROW(read_features_csv(frac, true), FormatError);
  std::istringstream empty("");
  EXPECT_THROW(read_features_csv(empty, false), FormatError);
}

TEST(Binary, RoundTripAndLayout) {
  FeatureMatrix f(2, 3);
  f << 1, 2, 3, 4, 5, 6.5;
  std::stringstream s;
  write_features_binary(f, s);
  const std::string bytes = s.str();
  ASSERT_EQ(bytes.size(), 4u + 8u + 6u * 8u);
  EXPECT_EQ(bytes.substr(0, 4), "PWLL");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 2);  // N, little-endian
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 3);  // d
  EXPECT_TRUE(read_features_binary(s) == f);
}

TEST(Binary, RejectsBadMagicAndTruncation) {
  std::istringstream bad("XXXX");
  EXPECT_THROW(read_features_binary(bad), FormatError);
  FeatureMatrix f = FeatureMatrix::Ones(2, 2);
  std::stringstream s;
  write_features_binary(f, s);
  std::istringstream cut(s.str().substr(0, 20));
  EXPECT_THROW(read_features_binary(cut), FormatError);
}

TEST(Sidecar, RoundTrip) {
  Sidecar sc{"blobs", 2, {0, 1, 2}, {}, 7};
  std::stringstream s;
  write_sidecar(sc, s);
  const Sidecar back = read_sidecar(s);
  EXPECT_EQ(back.name, "blobs");
  EXPECT_EQ(back.num_classes, 2);
  EXPECT_EQ(back.clusters, (std::vector<int>{0, 1, 2}));
  ASSERT_TRUE(back.seed.has_value());
  EXPECT_EQ(*back.seed, 7u);
}

TEST(DatasetFiles, SaveLoadCsvAndBinary) {
  const auto dir = std::filesystem::temp_directory_path() / "pwll_feature_io_test";
  std::filesystem::create_directories(dir);
  const Dataset d = gen_blobs(2);
  for (const char* name : {"blobs.csv", "blobs.bin"}) {
    const std::string path = (dir / name).string();
    save_dataset(d, path, 2);
    const Dataset back = load_dataset(path);
    EXPECT_TRUE(back.features == d.features) << name;
    EXPECT_EQ(back.true_labels, d.true_labels);
    EXPECT_EQ(back.cluster_ids, d.cluster_ids);
    EXPECT_EQ(back.name, "blobs");
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace pwll

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pwll/dataset.hpp"
#include "pwll/types.hpp"

namespace pwll {

struct FeatureTable {
  FeatureMatrix features;
  std::vector<int> labels;  // empty unless a label column was read
};

// One point per row, comma separated. A first row that does not parse as
// numbers is taken as a header. With has_labels the last column is an
// integer class. Throws FormatError with the offending line number.
FeatureTable read_features_csv(std::istream& in, bool has_labels);
void write_features_csv(const FeatureMatrix& features,
                        const std::vector<int>& labels, std::ostream& out);

// Little-endian: "PWLL", u32 N, u32 d, then N*d float64 row-major.
FeatureMatrix read_features_binary(std::istream& in);
void write_features_binary(const FeatureMatrix& features, std::ostream& out);

// JSON sidecar: name, num_classes, per-point cluster ids, optional
// per-point labels (needed for binary features) and the generator seed.
struct Sidecar {
  std::string name;
  int num_classes = 0;
  std::vector<int> clusters;
  std::vector<int> labels;
  std::optional<std::uint64_t> seed;
};
Sidecar read_sidecar(std::istream& in);
void write_sidecar(const Sidecar& sidecar, std::ostream& out);

// Loads <path> (".bin" means binary, anything else CSV with a label
// column) plus "<path>.json" when it exists. Without a sidecar every class
// is its own cluster. The result is validated.
Dataset load_dataset(const std::string& path);

// Writes <stem>.csv (or .bin) and <stem>.csv.json.
void save_dataset(const Dataset& dataset, const std::string& path,
                  std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace pwll

#include "pwll/feature_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "pwll/errors.hpp"

namespace pwll {

namespace {

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian platforms are not supported");

std::vector<std::string_view> SplitComma(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    std::string_view field = line.substr(start, pos - start);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
      field.remove_prefix(1);
    }
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' ||
                              field.back() == '\r')) {
      field.remove_suffix(1);
    }
    out.push_back(field);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool ParseDouble(std::string_view s, double& v) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool ParseInt(std::string_view s, int& v) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size();
}

FormatError LineError(std::size_t line, const std::string& msg) {
  return FormatError("line " + std::to_string(line) + ": " + msg);
}

template <typename T>
void PutLe(std::ostream& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes, bytes + sizeof(T));
  }
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T GetLe(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) {
    throw FormatError("binary feature file is truncated");
  }
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes, bytes + sizeof(T));
  }
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

FeatureTable read_features_csv(std::istream& in, bool has_labels) {
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  std::size_t width = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = SplitComma(line);
    std::vector<double> row;
    row.reserve(fields.size());
    bool numeric = true;
    const std::size_t n_feat = has_labels ? fields.size() - 1 : fields.size();
    for (std::size_t f = 0; f < n_feat && numeric; ++f) {
      double v;
      numeric = ParseDouble(fields[f], v);
      row.push_back(v);
    }
    int label = 0;
    if (numeric && has_labels) numeric = ParseInt(fields.back(), label);
    if (!numeric) {
      if (rows.empty() && width == 0) {
        width = fields.size();  // header
        continue;
      }
      throw LineError(lineno, "non-numeric field");
    }
    if (has_labels && fields.size() < 2) {
      throw LineError(lineno, "expected features and a label column");
    }
    if (width == 0) width = fields.size();
    if (fields.size() != width) {
      throw LineError(lineno, "expected " + std::to_string(width) +
                                  " columns, found " +
                                  std::to_string(fields.size()));
    }
    rows.push_back(std::move(row));
    if (has_labels) labels.push_back(label);
  }
  if (rows.empty()) throw FormatError("no data rows");

  FeatureTable t;
  t.features.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      t.features(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rows[r][c];
    }
  }
  t.labels = std::move(labels);
  return t;
}

void write_features_csv(const FeatureMatrix& features,
                        const std::vector<int>& labels, std::ostream& out) {
  if (!labels.empty() && labels.size() != static_cast<Index>(features.rows())) {
    throw InvalidArgument("label count does not match feature rows");
  }
  char buf[32];
  for (Eigen::Index r = 0; r < features.rows(); ++r) {
    for (Eigen::Index c = 0; c < features.cols(); ++c) {
      if (c > 0) out << ',';
      // Shortest round-trip representation.
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, features(r, c));
      out.write(buf, ptr - buf);
    }
    if (!labels.empty()) out << ',' << labels[static_cast<Index>(r)];
    out << '\n';
  }
}

FeatureMatrix read_features_binary(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, "PWLL", 4) != 0) {
    throw FormatError("missing PWLL magic");
  }
  const auto n = GetLe<std::uint32_t>(in);
  const auto d = GetLe<std::uint32_t>(in);
  if (n == 0 || d == 0) throw FormatError("empty binary feature matrix");
  FeatureMatrix x(n, d);
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t c = 0; c < d; ++c) x(r, c) = GetLe<double>(in);
  }
  return x;
}

void write_features_binary(const FeatureMatrix& features, std::ostream& out) {
  out.write("PWLL", 4);
  PutLe<std::uint32_t>(out, static_cast<std::uint32_t>(features.rows()));
  PutLe<std::uint32_t>(out, static_cast<std::uint32_t>(features.cols()));
  for (Eigen::Index r = 0; r < features.rows(); ++r) {
    for (Eigen::Index c = 0; c < features.cols(); ++c) {
      PutLe<double>(out, features(r, c));
    }
  }
}

Sidecar read_sidecar(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
    Sidecar s;
    s.name = j.value("name", std::string());
    s.num_classes = j.value("num_classes", 0);
    s.clusters = j.value("clusters", std::vector<int>());
    s.labels = j.value("labels", std::vector<int>());
    if (j.contains("seed") && !j["seed"].is_null()) {
      s.seed = j["seed"].get<std::uint64_t>();
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("sidecar: ") + e.what());
  }
}

void write_sidecar(const Sidecar& s, std::ostream& out) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  j["num_classes"] = s.num_classes;
  j["seed"] = s.seed ? nlohmann::ordered_json(*s.seed) : nullptr;
  j["clusters"] = s.clusters;
  if (!s.labels.empty()) j["labels"] = s.labels;
  out << j.dump() << '\n';
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  const bool binary = EndsWith(path, ".bin");

  Dataset d;
  d.name = std::filesystem::path(path).stem().string();
  if (binary) {
    d.features = read_features_binary(in);
  } else {
    FeatureTable t = read_features_csv(in, true);
    d.features = std::move(t.features);
    d.true_labels = std::move(t.labels);
  }

  std::ifstream side(path + ".json");
  if (side) {
    Sidecar s = read_sidecar(side);
    if (!s.name.empty()) d.name = s.name;
    if (!s.labels.empty()) d.true_labels = s.labels;
    d.cluster_ids = s.clusters;
  }
  if (d.true_labels.empty()) {
    throw FormatError(path + ": no labels (binary files need a sidecar)");
  }
  if (d.cluster_ids.empty()) d.cluster_ids = d.true_labels;
  d.validate();
  return d;
}

void save_dataset(const Dataset& dataset, const std::string& path,
                  std::optional<std::uint64_t> seed) {
  const bool binary = EndsWith(path, ".bin");
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    if (binary) {
      write_features_binary(dataset.features, out);
    } else {
      write_features_csv(dataset.features, dataset.true_labels, out);
    }
  }
  Sidecar s;
  s.name = dataset.name;
  s.num_classes = dataset.num_classes();
  s.clusters = dataset.cluster_ids;
  if (binary) s.labels = dataset.true_labels;
  s.seed = seed;
  std::ofstream out(path + ".json");
  if (!out) throw FormatError("cannot write " + path + ".json");
  write_sidecar(s, out);
}

}  // namespace pwll

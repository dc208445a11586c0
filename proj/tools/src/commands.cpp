#include "pwll_tools/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "json.hpp"
#include "pwll/errors.hpp"
#include "pwll/experiment_io.hpp"
#include "pwll/graph.hpp"

namespace pwll::commands {
namespace {

std::string Num(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void WriteSnapshot(const ActiveLearner& l, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  const Dataset& d = l.dataset();
  std::vector<double> score(d.size(), 0.0);
  std::vector<char> has(d.size(), 0);
  for (Index r = 0; r < l.scores().size(); ++r) {
    score[l.scores().indices[r]] = l.scores().values[r];
    has[l.scores().indices[r]] = 1;
  }
  out << "index";
  for (Index c = 0; c < d.dimension(); ++c) out << ",x" << c;
  out << ",predicted,labeled,score\n";
  for (Index i = 0; i < d.size(); ++i) {
    out << i;
    for (Index c = 0; c < d.dimension(); ++c) {
      out << ',' << Num(d.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)));
    }
    out << ',' << l.predictions()[i] << ',' << (l.labels().is_labeled(i) ? 1 : 0) << ',';
    if (has[i]) out << Num(score[i]);
    out << '\n';
  }
}

bool SnapshotAt(Index n, Index last) {
  static const Index marks[] = {0, 1, 2, 5, 10, 20, 50, 100, 200};
  return n == last || std::find(std::begin(marks), std::end(marks), n) != std::end(marks);
}

}  // namespace

std::string output_directory(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("PWLL_OUT_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return "out";
}

void run(const RunConfig& config, const std::string& out_dir, std::ostream& log) {
  config.validate();
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  nlohmann::ordered_json manifest;
  nlohmann::ordered_json settings;
  for (const auto& [k, v] : config.describe()) settings[k] = v;
  manifest["config"] = settings;
  manifest["runs"] = nlohmann::json::array();

  GraphOptions go;
  go.k = config.k;
  go.jitter_duplicates = config.jitter;
  Dataset data;
  std::optional<SimilarityGraph> graph;
  for (std::uint64_t seed : config.seeds) {
    if (!graph || config.dataset_depends_on_seed()) {
      data = config.load_dataset_for(seed);
      graph.emplace(build_knn_graph(data.features, go));
    }
    for (const std::string& acq : config.acquisitions) {
      const ExperimentConfig ec = config.experiment(acq, seed);
      const std::string stem = acq + "_seed" + std::to_string(seed);
      IterationCallback snap;
      if (config.snapshots) {
        snap = [&](const ActiveLearner& l, const IterationRecord& r) {
          if (SnapshotAt(r.iteration, ec.n_queries)) {
            WriteSnapshot(l, (fs::path(out_dir) / (stem + "_iter" + std::to_string(r.iteration) +
                                                   ".csv")).string());
          }
        };
      }
      const IterationLog result = run_experiment(data, *graph, ec, truth_oracle(data), snap);
      const std::string file = stem + ".csv";
      {
        std::ofstream out(fs::path(out_dir) / file);
        if (!out) throw Error("cannot write " + file);
        write_log_csv(result, out);
      }
      const IterationRecord& last = result.records.back();
      nlohmann::ordered_json entry;
      entry["acquisition"] = acq;
      entry["seed"] = seed;
      entry["file"] = file;
      entry["dataset"] = data.name;
      entry["num_points"] = data.size();
      entry["queries"] = last.iteration;
      entry["initial_labels"] = result.initial_labels;
      entry["final_accuracy"] = last.accuracy;
      entry["final_cluster_proportion"] = last.cluster_proportion;
      manifest["runs"].push_back(entry);
      log << stem << ": accuracy " << last.accuracy << ", cluster proportion "
          << last.cluster_proportion << '\n';
    }
  }
  std::ofstream out(fs::path(out_dir) / "manifest.json");
  if (!out) throw Error("cannot write manifest.json");
  out << manifest.dump(2) << '\n';
}

}  // namespace pwll::commands

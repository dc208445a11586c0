#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pwll/active_loop.hpp"
#include "pwll/dataset.hpp"

namespace pwll {

// Flat "key = value" experiment description. '#' starts a comment.
//
//   dataset         blobs | box | path to a CSV/.bin feature file
//   box_half_width  band half-width for box (0.01)
//   relabel_k       mod-k relabeling, 0 = off
//   k               graph neighbours (10)
//   jitter          true | false
//   acquisitions    comma list of sm, norm, norm-decay, random
//   policy          argmax | kde | proportional | random (applies to the
//                   non-random acquisitions)
//   tau             fixed tau for "norm" (1.0)
//   tau0, K, eps    schedule for "norm-decay" (1e4, 8, 1e-9)
//   seeds           comma list and/or ranges, e.g. 0-9 or 1,4,7
//   n_queries       queries per run (100)
//   initial         one-per-class | one-total | comma list of indices
//   kde_percentile, kde_k, khat, warm_start, record_timing, snapshots
struct RunConfig {
  std::string dataset = "blobs";
  double box_half_width = 0.01;
  int relabel_k = 0;
  Index k = 10;
  bool jitter = false;
  std::vector<std::string> acquisitions{"sm", "norm", "norm-decay"};
  PolicyKind policy = PolicyKind::kArgmax;
  double tau = 1.0;
  TauSchedule schedule{1e4, 8, 1e-9};
  std::vector<std::uint64_t> seeds{0};
  Index n_queries = 100;
  InitialRule initial_rule = InitialRule::kOnePerClass;
  std::vector<Index> initial_labels;
  double kde_percentile = 10.0;
  Index kde_k = 0;
  double khat = 0.0;
  bool warm_start = true;
  bool record_timing = false;
  bool snapshots = false;

  // Line each key was set on (0 when it came from an override).
  std::map<std::string, std::size_t> origin;

  // Applies one key; line tags errors. Throws ConfigError.
  void set(const std::string& key, const std::string& value,
           std::size_t line = 0);
  // Cross-key checks, reported against the line of the offending key.
  void validate() const;

  // Per-acquisition experiment settings for one seed.
  ExperimentConfig experiment(const std::string& acquisition,
                              std::uint64_t seed) const;
  // The dataset for a seed (blobs draws a fresh sample per seed).
  Dataset load_dataset_for(std::uint64_t seed) const;
  // Whether the dataset differs between seeds.
  bool dataset_depends_on_seed() const { return dataset == "blobs"; }

  // Echo of the effective settings in key order.
  std::map<std::string, std::string> describe() const;
};

RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

}  // namespace pwll

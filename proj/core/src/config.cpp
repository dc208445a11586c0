#include "pwll/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "pwll/datasets.hpp"
#include "pwll/errors.hpp"
#include "pwll/feature_io.hpp"

namespace pwll {

namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double ToDouble(const std::string& key, const std::string& v, std::size_t line) {
  double out = 0.0;
  const char* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(line, key + ": expected a number, got '" + v + "'");
  }
  return out;
}

std::uint64_t ToUnsigned(const std::string& key, const std::string& v,
                         std::size_t line) {
  std::uint64_t out = 0;
  const char* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(line,
                      key + ": expected a nonnegative integer, got '" + v + "'");
  }
  return out;
}

bool ToBool(const std::string& key, const std::string& v, std::size_t line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(line, key + ": expected true or false, got '" + v + "'");
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value,
                    std::size_t line) {
  const std::string v = Trim(value);
  if (key == "dataset") {
    if (v.empty()) throw ConfigError(line, "dataset: empty value");
    dataset = v;
  } else if (key == "box_half_width") {
    box_half_width = ToDouble(key, v, line);
  } else if (key == "relabel_k") {
    relabel_k = static_cast<int>(ToUnsigned(key, v, line));
  } else if (key == "k") {
    k = ToUnsigned(key, v, line);
    if (k == 0) throw ConfigError(line, "k must be positive");
  } else if (key == "jitter") {
    jitter = ToBool(key, v, line);
  } else if (key == "acquisitions" || key == "acquisition") {
    std::vector<std::string> list = SplitList(v);
    if (list.empty()) throw ConfigError(line, key + ": empty list");
    for (const auto& a : list) {
      if (a != "sm" && a != "norm" && a != "norm-decay" && a != "random") {
        throw ConfigError(line, "unknown acquisition '" + a + "'");
      }
    }
    acquisitions = std::move(list);
  } else if (key == "policy") {
    if (v == "argmax") {
      policy = PolicyKind::kArgmax;
    } else if (v == "kde") {
      policy = PolicyKind::kKdeFiltered;
    } else if (v == "proportional") {
      policy = PolicyKind::kProportional;
    } else if (v == "random") {
      policy = PolicyKind::kRandom;
    } else {
      throw ConfigError(line, "unknown policy '" + v + "'");
    }
  } else if (key == "tau") {
    tau = ToDouble(key, v, line);
  } else if (key == "tau0") {
    schedule.tau0 = ToDouble(key, v, line);
  } else if (key == "K") {
    schedule.K = static_cast<int>(ToUnsigned(key, v, line));
  } else if (key == "eps") {
    schedule.eps = ToDouble(key, v, line);
  } else if (key == "seeds") {
    std::vector<std::uint64_t> out;
    for (const auto& item : SplitList(v)) {
      const auto dash = item.find('-');
      if (dash == std::string::npos) {
        out.push_back(ToUnsigned(key, item, line));
      } else {
        const auto lo = ToUnsigned(key, Trim(item.substr(0, dash)), line);
        const auto hi = ToUnsigned(key, Trim(item.substr(dash + 1)), line);
        if (hi < lo) throw ConfigError(line, "seeds: empty range " + item);
        for (auto s = lo; s <= hi; ++s) out.push_back(s);
      }
    }
    if (out.empty()) throw ConfigError(line, "seeds: empty list");
    seeds = std::move(out);
  } else if (key == "n_queries") {
    n_queries = ToUnsigned(key, v, line);
  } else if (key == "initial") {
    if (v == "one-per-class") {
      initial_rule = InitialRule::kOnePerClass;
    } else if (v == "one-total") {
      initial_rule = InitialRule::kOneTotal;
    } else {
      initial_rule = InitialRule::kExplicit;
      initial_labels.clear();
      for (const auto& item : SplitList(v)) {
        initial_labels.push_back(ToUnsigned(key, item, line));
      }
    }
  } else if (key == "kde_percentile") {
    kde_percentile = ToDouble(key, v, line);
  } else if (key == "kde_k") {
    kde_k = ToUnsigned(key, v, line);
  } else if (key == "khat") {
    khat = ToDouble(key, v, line);
  } else if (key == "warm_start") {
    warm_start = ToBool(key, v, line);
  } else if (key == "record_timing") {
    record_timing = ToBool(key, v, line);
  } else if (key == "snapshots") {
    snapshots = ToBool(key, v, line);
  } else {
    throw ConfigError(line, "unknown key '" + key + "'");
  }
  origin[key] = line;
}

void RunConfig::validate() const {
  auto line_of = [this](const std::string& key) {
    auto it = origin.find(key);
    return it == origin.end() ? std::size_t{0} : it->second;
  };
  const bool decay = std::find(acquisitions.begin(), acquisitions.end(),
                               "norm-decay") != acquisitions.end();
  const bool fixed = std::find(acquisitions.begin(), acquisitions.end(),
                               "norm") != acquisitions.end();
  if (decay) {
    if (!(schedule.tau0 > 0.0)) {
      throw ConfigError(line_of("tau0"), "tau0 must be positive for norm-decay");
    }
    if (schedule.K < 1) throw ConfigError(line_of("K"), "K must be at least 1");
    if (!(schedule.eps > 0.0 && schedule.eps < schedule.tau0)) {
      throw ConfigError(line_of("eps"), "eps must lie in (0, tau0)");
    }
  }
  if (fixed && !(tau >= 0.0)) {
    throw ConfigError(line_of("tau"), "tau must be nonnegative");
  }
  if (n_queries < 1) {
    throw ConfigError(line_of("n_queries"), "n_queries must be at least 1");
  }
  if (!(box_half_width >= 0.0)) {
    throw ConfigError(line_of("box_half_width"), "half-width must be >= 0");
  }
  if (!(kde_percentile >= 0.0 && kde_percentile <= 100.0)) {
    throw ConfigError(line_of("kde_percentile"), "must lie in [0, 100]");
  }
  if (khat != 0.0 && !(khat >= 1.0)) {
    throw ConfigError(line_of("khat"), "khat must be 0 (auto) or >= 1");
  }
  if (relabel_k == 1) {
    throw ConfigError(line_of("relabel_k"), "relabel_k must be 0 or >= 2");
  }
}

ExperimentConfig RunConfig::experiment(const std::string& acquisition,
                                       std::uint64_t seed) const {
  ExperimentConfig e;
  e.acquisition = acquisition_preset(acquisition, tau, schedule);
  if (e.acquisition.policy != PolicyKind::kRandom) e.acquisition.policy = policy;
  e.n_queries = n_queries;
  e.seed = seed;
  e.initial_rule = initial_rule;
  e.initial_labels = initial_labels;
  e.kde_percentile = kde_percentile;
  e.kde_k = kde_k;
  e.khat = khat;
  e.warm_start = warm_start;
  e.record_timing = record_timing;
  return e;
}

Dataset RunConfig::load_dataset_for(std::uint64_t seed) const {
  Dataset d;
  if (dataset == "blobs") {
    d = gen_blobs(seed);
  } else if (dataset == "box") {
    d = gen_box(box_half_width);
  } else {
    d = load_dataset(dataset);
  }
  if (relabel_k != 0) d = relabel_mod_k(d, relabel_k);
  d.validate();
  return d;
}

std::map<std::string, std::string> RunConfig::describe() const {
  auto num = [](double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
  };
  auto join = [](const auto& items) {
    std::ostringstream s;
    bool first = true;
    for (const auto& x : items) {
      if (!first) s << ',';
      s << x;
      first = false;
    }
    return s.str();
  };
  std::map<std::string, std::string> m;
  m["dataset"] = dataset;
  m["box_half_width"] = num(box_half_width);
  m["relabel_k"] = std::to_string(relabel_k);
  m["k"] = std::to_string(k);
  m["jitter"] = jitter ? "true" : "false";
  m["acquisitions"] = join(acquisitions);
  m["policy"] = to_string(policy);
  m["tau"] = num(tau);
  m["tau0"] = num(schedule.tau0);
  m["K"] = std::to_string(schedule.K);
  m["eps"] = num(schedule.eps);
  m["seeds"] = join(seeds);
  m["n_queries"] = std::to_string(n_queries);
  m["initial"] = initial_rule == InitialRule::kExplicit
                     ? join(initial_labels)
                     : std::string(to_string(initial_rule));
  m["kde_percentile"] = num(kde_percentile);
  m["kde_k"] = std::to_string(kde_k);
  m["khat"] = num(khat);
  m["warm_start"] = warm_start ? "true" : "false";
  m["record_timing"] = record_timing ? "true" : "false";
  m["snapshots"] = snapshots ? "true" : "false";
  return m;
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = Trim(raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line, "expected key = value");
    }
    const std::string key = Trim(text.substr(0, eq));
    if (key.empty()) throw ConfigError(line, "missing key");
    cfg.set(key, text.substr(eq + 1), line);
  }
  cfg.validate();
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open " + path);
  return parse_config(in);
}

}  // namespace pwll

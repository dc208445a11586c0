#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include "pwll/config.hpp"
#include "pwll/datasets.hpp"
#include "pwll/errors.hpp"
#include "pwll/feature_io.hpp"
#include "pwll/graph.hpp"
#include "pwll_tools/commands.hpp"
#include "pwll_tools/service.hpp"
#include "pwll_tools/sweep.hpp"

// After Eigen: resolv.h defines a macro named _res.
#include <httplib.h>

namespace {

struct Overrides {
  std::vector<std::string> pairs;
  std::string dataset, seeds, acquisitions, policy;
  double tau = -1.0, tau0 = -1.0;
  int n_queries = 0;

  void add(CLI::App* app) {
    app->add_option("-s,--set", pairs, "Override a config key (key=value), repeatable");
    app->add_option("--dataset", dataset, "blobs, box or a feature file");
    app->add_option("--seeds", seeds, "Seed list, e.g. 0-9");
    app->add_option("--acquisitions", acquisitions, "Comma list of sm, norm, norm-decay, random");
    app->add_option("--policy", policy, "argmax, kde, proportional or random");
    app->add_option("--tau", tau, "Fixed tau for norm");
    app->add_option("--tau0", tau0, "Initial tau for norm-decay");
    app->add_option("--n-queries", n_queries, "Queries per run");
  }

  pwll::RunConfig apply(const std::string& path) const {
    pwll::RunConfig cfg = path.empty() ? pwll::RunConfig{} : pwll::parse_config_file(path);
    auto set = [&](const std::string& k, const std::string& v) { cfg.set(k, v, 0); };
    if (!dataset.empty()) set("dataset", dataset);
    if (!seeds.empty()) set("seeds", seeds);
    if (!acquisitions.empty()) set("acquisitions", acquisitions);
    if (!policy.empty()) set("policy", policy);
    if (tau >= 0.0) set("tau", std::to_string(tau));
    if (tau0 >= 0.0) set("tau0", std::to_string(tau0));
    if (n_queries > 0) set("n_queries", std::to_string(n_queries));
    for (const std::string& p : pairs) {
      const auto eq = p.find('=');
      if (eq == std::string::npos) throw pwll::ConfigError(0, "--set expects key=value: " + p);
      set(p.substr(0, eq), p.substr(eq + 1));
    }
    cfg.validate();
    return cfg;
  }
};

int Serve(const pwll::RunConfig& cfg, const std::string& acquisition, std::uint64_t seed,
          const std::string& host, int port, const std::string& static_dir) {
  auto data = std::make_shared<const pwll::Dataset>(cfg.load_dataset_for(seed));
  pwll::GraphOptions go;
  go.k = cfg.k;
  go.jitter_duplicates = cfg.jitter;
  auto graph = std::make_shared<const pwll::SimilarityGraph>(
      pwll::build_knn_graph(data->features, go));
  const std::string acq = acquisition.empty() ? cfg.acquisitions.front() : acquisition;
  pwll::service::LabelService service(data, graph, cfg.experiment(acq, seed));
  httplib::Server server;
  service.mount(server, static_dir);
  std::cerr << "serving " << data->name << " (" << data->size() << " points, " << acq
            << ") on http://" << host << ':' << port << '\n';
  return server.listen(host, port) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PWLL-tau graph active learning"};
  app.require_subcommand(1);

  Overrides run_over;
  std::string run_config, run_out;
  auto* run = app.add_subcommand("run", "Run active-learning experiments from a config file");
  run->add_option("config", run_config, "Config file (key = value)")->check(CLI::ExistingFile);
  run->add_option("-o,--out", run_out, "Output directory (default $PWLL_OUT_DIR or ./out)");
  run_over.add(run);

  std::string sweep_file, sweep_out;
  auto* cont = app.add_subcommand("continuum", "Evaluate a 1D continuum sweep file to CSV");
  cont->add_option("sweep", sweep_file, "Sweep file")->required()->check(CLI::ExistingFile);
  cont->add_option("-o,--out", sweep_out,
                   "Output CSV (default continuum.csv in the output directory)");

  Overrides serve_over;
  std::string serve_config, host = "127.0.0.1", static_dir, serve_acq;
  int port = 8080;
  std::uint64_t serve_seed = 0;
  auto* serve = app.add_subcommand("serve", "Start the labeling service");
  serve->add_option("config", serve_config, "Config file")->check(CLI::ExistingFile);
  serve->add_option("--host", host, "Bind address");
  serve->add_option("-p,--port", port, "Port");
  serve->add_option("--static", static_dir, "Directory served at /")->check(CLI::ExistingDirectory);
  serve->add_option("--acquisition", serve_acq, "Acquisition (default: first in config)");
  serve->add_option("--seed", serve_seed, "Seed for the dataset and initial labels");
  serve_over.add(serve);

  std::string kind, gen_out;
  std::uint64_t gen_seed = 0;
  double half_width = 0.01;
  int relabel_k = 0;
  auto* gen = app.add_subcommand("gen-data", "Write a synthetic dataset (.csv or .bin plus sidecar)");
  gen->add_option("kind", kind, "blobs or box")->required()->check(CLI::IsMember({"blobs", "box"}));
  gen->add_option("-o,--out", gen_out, "Output path")->required();
  gen->add_option("--seed", gen_seed, "Generator seed (blobs)");
  gen->add_option("--half-width", half_width, "Band half-width (box)");
  gen->add_option("--relabel-k", relabel_k, "Apply mod-k relabeling");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const pwll::RunConfig cfg = run_over.apply(run_config);
      pwll::commands::run(cfg, pwll::commands::output_directory(run_out), std::cerr);
    } else if (cont->parsed()) {
      std::ifstream in(sweep_file);
      const auto lines = pwll::sweep::parse(in);
      std::string path = sweep_out;
      if (path.empty()) {
        const std::string dir = pwll::commands::output_directory("");
        std::filesystem::create_directories(dir);
        path = (std::filesystem::path(dir) / "continuum.csv").string();
      }
      std::ofstream out(path);
      if (!out) throw pwll::Error("cannot write " + path);
      pwll::sweep::run(lines, out);
    } else if (serve->parsed()) {
      const pwll::RunConfig cfg = serve_over.apply(serve_config);
      return Serve(cfg, serve_acq, serve_seed, host, port, static_dir);
    } else if (gen->parsed()) {
      pwll::Dataset d = kind == "blobs" ? pwll::gen_blobs(gen_seed) : pwll::gen_box(half_width);
      if (relabel_k != 0) d = pwll::relabel_mod_k(d, relabel_k);
      pwll::save_dataset(d, gen_out,
                         kind == "blobs" ? std::optional<std::uint64_t>(gen_seed) : std::nullopt);
    }
  } catch (const pwll::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

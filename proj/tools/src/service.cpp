#include "pwll_tools/service.hpp"

#include <cmath>
#include <limits>

#include "pwll/errors.hpp"

// After Eigen: resolv.h defines a macro named _res.
#include <httplib.h>

namespace pwll::service {
namespace {

using nlohmann::json;

json Error(const std::string& message) { return json{{"error", message}}; }

int NotFound(const std::string& id, json& body) {
  body = Error("unknown session '" + id + "'");
  return 404;
}

json Summary(const ActiveLearner& l, Index suggestion,
             const std::vector<LabelEvent>& history) {
  const Dataset& d = l.dataset();
  json labeled = json::array();
  for (Index r = 0; r < l.labels().labeled().size(); ++r) {
    labeled.push_back({{"index", l.labels().labeled()[r]},
                       {"class", l.labels().observed()[r]}});
  }
  const AcquisitionSpec& a = l.acquisition();
  json out{
      {"dataset",
       {{"name", d.name},
        {"size", d.size()},
        {"dimension", d.dimension()},
        {"num_classes", d.num_classes()},
        {"num_clusters", d.num_clusters()}}},
      {"acquisition",
       {{"name", a.name},
        {"score", to_string(a.score)},
        {"policy", to_string(a.policy)},
        {"tau_mode", to_string(a.tau_mode)}}},
      {"queries", l.queries()},
      {"initial_labels", l.log().initial_labels},
      {"labeled", labeled},
      {"history_size", history.size()},
      {"metrics", record_json(l.log().records.back())},
  };
  const bool done = l.labels().labeled().size() == d.size();
  out["suggestion"] = done ? json(nullptr) : json(suggestion);
  return out;
}

}  // namespace

json record_json(const IterationRecord& r) {
  return json{{"iteration", r.iteration},
              {"query_index", r.query_index},
              {"class", r.observed_class},
              {"accuracy", r.accuracy},
              {"cluster_proportion", r.cluster_proportion},
              {"tau", r.tau},
              {"ms", r.ms}};
}

LabelService::LabelService(std::shared_ptr<const Dataset> dataset,
                           std::shared_ptr<const SimilarityGraph> graph,
                           ExperimentConfig config)
    : dataset_(std::move(dataset)),
      graph_(std::move(graph)),
      config_(std::move(config)) {
  config_.validate();
}

std::shared_ptr<LabelingSession> LabelService::Create(ExperimentConfig config) {
  // Solving happens outside the registry lock.
  std::string id;
  {
    std::lock_guard lock(mutex_);
    id = "s" + std::to_string(next_id_++);
  }
  auto s = std::make_shared<LabelingSession>(id, dataset_, graph_, config);
  std::lock_guard lock(mutex_);
  sessions_[id] = s;
  if (default_id_.empty()) default_id_ = id;
  return s;
}

std::shared_ptr<LabelingSession> LabelService::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  const std::string key = id.empty() ? default_id_ : id;
  auto it = sessions_.find(key);
  return it == sessions_.end() ? nullptr : it->second;
}

int LabelService::get_session(const std::string& id, json& body) {
  auto s = find(id);
  if (!s && id.empty()) s = Create(config_);
  if (!s) return NotFound(id, body);
  body = s->read([&](const ActiveLearner& l, Index sg, const auto& h) {
    return Summary(l, sg, h);
  });
  body["id"] = s->id();
  return 200;
}

int LabelService::create_session(const json& request, json& body) {
  ExperimentConfig c = config_;
  if (request.is_object() && request.contains("seed")) {
    if (!request["seed"].is_number_unsigned()) {
      body = Error("seed must be a nonnegative integer");
      return 400;
    }
    c.seed = request["seed"].get<std::uint64_t>();
  }
  auto s = Create(c);
  return get_session(s->id(), body);
}

int LabelService::get_points(const std::string& id, json& body) {
  auto s = find(id);
  if (!s) return NotFound(id, body);
  body = s->read([&](const ActiveLearner& l, Index, const auto&) {
    const Dataset& d = l.dataset();
    const auto n = static_cast<Eigen::Index>(d.size());
    std::vector<double> x(d.size()), y(d.size(), 0.0);
    std::vector<json> score(d.size(), nullptr);
    for (Eigen::Index i = 0; i < n; ++i) {
      x[static_cast<Index>(i)] = d.features(i, 0);
      if (d.dimension() > 1) y[static_cast<Index>(i)] = d.features(i, 1);
    }
    const AcquisitionScores& sc = l.scores();
    for (Index r = 0; r < sc.size(); ++r) score[sc.indices[r]] = sc.values[r];
    return json{{"x", x},
                {"y", y},
                {"predicted", l.predictions()},
                {"score", score},
                {"score_kind", to_string(sc.kind)},
                {"labeled", l.labels().labeled()},
                {"observed", l.labels().observed()}};
  });
  body["id"] = s->id();
  return 200;
}

int LabelService::get_suggest(const std::string& id, json& body) {
  auto s = find(id);
  if (!s) return NotFound(id, body);
  body = s->read([&](const ActiveLearner& l, Index sg, const auto&) {
    if (l.labels().labeled().size() == l.dataset().size()) {
      return json{{"index", nullptr}, {"tau", l.current_tau()}};
    }
    const AcquisitionScores& sc = l.scores();
    double value = std::numeric_limits<double>::quiet_NaN();
    for (Index r = 0; r < sc.size(); ++r) {
      if (sc.indices[r] == sg) value = sc.values[r];
    }
    return json{{"index", sg}, {"score", value}, {"tau", l.current_tau()}};
  });
  body["id"] = s->id();
  return 200;
}

int LabelService::post_label(const std::string& id, const std::string& request,
                             json& body) {
  auto s = find(id);
  if (!s) return NotFound(id, body);
  const json req = json::parse(request, nullptr, false);
  if (req.is_discarded() || !req.is_object() || !req.contains("index") ||
      !req.contains("class") || !req["index"].is_number_integer() ||
      !req["class"].is_number_integer()) {
    body = Error("expected {\"index\": int, \"class\": int}");
    return 400;
  }
  const long long index = req["index"].get<long long>();
  const long long cls = req["class"].get<long long>();
  if (index < 0) {
    body = Error("index out of range");
    return 400;
  }
  const int klass = cls < std::numeric_limits<int>::min() || cls > std::numeric_limits<int>::max()
                        ? -1
                        : static_cast<int>(cls);
  switch (s->label(static_cast<Index>(index), klass)) {
    case LabelOutcome::kAlreadyLabeled:
      body = Error("index " + std::to_string(index) + " is already labeled");
      return 409;
    case LabelOutcome::kClassOutOfRange:
      body = Error("class out of range");
      return 400;
    case LabelOutcome::kIndexOutOfRange:
      body = Error("index out of range");
      return 400;
    case LabelOutcome::kApplied:
      break;
  }
  return get_session(s->id(), body);
}

int LabelService::get_metrics(const std::string& id, json& body) {
  auto s = find(id);
  if (!s) return NotFound(id, body);
  body = s->read([&](const ActiveLearner& l, Index, const auto&) {
    json records = json::array();
    for (const auto& r : l.log().records) records.push_back(record_json(r));
    return json{{"records", records}, {"initial_labels", l.log().initial_labels}};
  });
  body["id"] = s->id();
  return 200;
}

void LabelService::mount(httplib::Server& server, const std::string& static_dir) {
  auto reply = [](httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  };
  auto session_of = [](const httplib::Request& req) {
    if (req.has_param("session")) return req.get_param_value("session");
    if (req.has_param("id")) return req.get_param_value("id");
    return std::string();
  };
  auto guarded = [reply](auto&& handler) {
    return [reply, handler](const httplib::Request& req, httplib::Response& res) {
      json body;
      try {
        reply(res, handler(req, body), body);
      } catch (const std::exception& e) {
        reply(res, 500, Error(e.what()));
      }
    };
  };
  server.Get("/api/session", guarded([this, session_of](const auto& req, json& b) {
               return get_session(session_of(req), b);
             }));
  server.Post("/api/session", guarded([this](const auto& req, json& b) {
                const json r = req.body.empty() ? json::object()
                                                : json::parse(req.body, nullptr, false);
                if (r.is_discarded()) {
                  b = Error("malformed JSON");
                  return 400;
                }
                return create_session(r, b);
              }));
  server.Get("/api/points", guarded([this, session_of](const auto& req, json& b) {
               return get_points(session_of(req), b);
             }));
  server.Get("/api/suggest", guarded([this, session_of](const auto& req, json& b) {
               return get_suggest(session_of(req), b);
             }));
  server.Post("/api/label", guarded([this, session_of](const auto& req, json& b) {
                return post_label(session_of(req), req.body, b);
              }));
  server.Get("/api/metrics", guarded([this, session_of](const auto& req, json& b) {
               return get_metrics(session_of(req), b);
             }));
  if (!static_dir.empty()) server.set_mount_point("/", static_dir);
}

}  // namespace pwll::service

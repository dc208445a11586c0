#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "json.hpp"

#include "pwll/session.hpp"

namespace httplib {
class Server;
}

namespace pwll::service {

// Sessions over one dataset and graph. The first GET /api/session creates
// the default session; POST /api/session starts another one.
class LabelService {
 public:
  LabelService(std::shared_ptr<const Dataset> dataset,
               std::shared_ptr<const SimilarityGraph> graph,
               ExperimentConfig config);

  // Registers the /api routes and, when static_dir is non-empty, serves it
  // at "/".
  void mount(httplib::Server& server, const std::string& static_dir = "");

  // Handlers, usable without a socket. Each returns an HTTP status and
  // fills body.
  int get_session(const std::string& id, nlohmann::json& body);
  int create_session(const nlohmann::json& request, nlohmann::json& body);
  int get_points(const std::string& id, nlohmann::json& body);
  int get_suggest(const std::string& id, nlohmann::json& body);
  int post_label(const std::string& id, const std::string& request,
                 nlohmann::json& body);
  int get_metrics(const std::string& id, nlohmann::json& body);

  // nullptr when unknown; "" names the default session.
  std::shared_ptr<LabelingSession> find(const std::string& id);

 private:
  std::shared_ptr<LabelingSession> Create(ExperimentConfig config);

  std::shared_ptr<const Dataset> dataset_;
  std::shared_ptr<const SimilarityGraph> graph_;
  ExperimentConfig config_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<LabelingSession>> sessions_;
  std::string default_id_;
  unsigned next_id_ = 1;
};

nlohmann::json record_json(const IterationRecord& r);

}  // namespace pwll::service

// Copyright 2026 The Frame Align Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "framealign/curation.h"

#include <httplib.h>

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <json.hpp>
#include <map>

#include "framealign/decision_log.h"
#include "framealign/error.h"

namespace framealign {

using nlohmann::json;

namespace {

bool KeyExists(const PipelineResult &state, const DecisionKey &key) {
  if (const auto *a = std::get_if<AssignmentKey>(&key)) {
    return std::any_of(state.assignments.begin(), state.assignments.end(),
                       [&](const FrameAssignment &x) {
                         return x.verb == a->verb && x.frame == a->frame;
                       });
  }
  const auto &m = std::get<MappingKey>(key);
  return std::any_of(state.candidates.begin(), state.candidates.end(),
                     [&](const MappingCandidate &c) {
                       return c.term == m.term && c.frame == m.frame;
                     });
}

json DecisionJson(const CurationDecision &d) {
  return json::parse(DecisionToJsonLine(d));
}

// Ancestors with their edge distance from the term, nearest first.
json AncestorChain(const OntologyGraph &graph, const TermId &id,
                   Relations relations) {
  std::deque<TermId> queue{id};
  std::map<TermId, int> depth{{id, 0}};
  while (!queue.empty()) {
    TermId current = queue.front();
    queue.pop_front();
    const Term &t = graph.Get(current);
    if (t.obsolete) continue;
    auto visit = [&](const std::vector<TermId> &parents) {
      for (const TermId &p : parents) {
        const Term *parent = graph.Find(p);
        if (parent == nullptr || parent->obsolete || depth.count(p)) continue;
        depth[p] = depth[current] + 1;
        queue.push_back(p);
      }
    };
    if (relations.is_a) visit(t.is_a_parents);
    if (relations.part_of) visit(t.part_of_parents);
  }
  std::vector<std::pair<int, TermId>> ordered;
  for (const auto &[t, d] : depth) {
    if (t != id) ordered.emplace_back(d, t);
  }
  std::sort(ordered.begin(), ordered.end());
  json out = json::array();
  for (const auto &[d, t] : ordered) {
    out.push_back({{"id", t.str()}, {"name", graph.Get(t).name}, {"distance", d}});
  }
  return out;
}

}  // namespace

CurationService::CurationService(PipelineInputs inputs, PipelineOptions options,
                                 std::filesystem::path log_path, Clock clock)
    : inputs_(std::move(inputs)),
      options_(std::move(options)),
      log_path_(std::move(log_path)),
      clock_(clock ? std::move(clock) : Clock(UtcTimestamp)) {
  options_.curation = CurationMode::kLenient;
  decisions_ = ReadDecisionLog(log_path_);
  state_ = RunPipeline(inputs_, options_, decisions_);
}

CurationDecision CurationService::Submit(CurationDecision decision) {
  if (decision.curator.empty()) throw InputError("decision needs a curator");
  std::unique_lock lock(mu_);
  if (!KeyExists(state_, decision.key)) {
    throw InputError("decision references unknown " + DescribeKey(decision.key));
  }
  decision.timestamp = clock_();
  AppendDecision(log_path_, decision);
  decisions_.push_back(decision);
  state_ = RunPipeline(inputs_, options_, decisions_);
  return decision;
}

PipelineResult CurationService::Snapshot() const {
  std::shared_lock lock(mu_);
  return state_;
}

std::vector<CurationDecision> CurationService::Decisions() const {
  std::shared_lock lock(mu_);
  return decisions_;
}

std::string CurationService::FramesJson() const {
  std::shared_lock lock(mu_);
  json out = json::array();
  for (const auto &[name, frame] : inputs_.index.frames()) {
    json lus = json::array();
    for (const LexicalUnit &lu : frame.lexical_units) {
      lus.push_back({{"lemma", lu.lemma}, {"pos", PartOfSpeechTag(lu.pos)}});
    }
    out.push_back({{"name", name},
                   {"definition", frame.definition},
                   {"lexical_units", lus},
                   {"frame_elements", frame.frame_elements},
                   {"accepted", state_.accepted_frames.count(name) > 0}});
  }
  return out.dump();
}

std::string CurationService::AssignmentsJson() const {
  json report = json::parse(ReportJson());
  return report["assignments"].dump();
}

std::string CurationService::CandidatesJson(const std::string &frame,
                                            const std::string &status) const {
  json report = json::parse(ReportJson());
  std::map<DecisionKey, CurationDecision> latest;
  for (const CurationDecision &d : Decisions()) latest.insert_or_assign(d.key, d);

  json out = json::array();
  for (json &c : report["candidates"]) {
    if (!frame.empty() && c["frame"] != frame) continue;
    if (!status.empty() && c["status"] != status) continue;
    const Frame *f = inputs_.index.Find(c["frame"].get<std::string>());
    c["frame_definition"] = f ? f->definition : "";
    DecisionKey key = MappingKey{TermId::Parse(c["term"].get<std::string>()),
                                 c["frame"].get<std::string>()};
    auto it = latest.find(key);
    c["decision"] = it == latest.end() ? json(nullptr) : DecisionJson(it->second);
    out.push_back(std::move(c));
  }
  return out.dump();
}

std::optional<std::string> CurationService::TermJson(const std::string &id) const {
  if (!TermId::IsValid(id)) return std::nullopt;
  TermId term_id = TermId::Parse(id);
  const Term *t = inputs_.graph.Find(term_id);
  if (t == nullptr) return std::nullopt;
  auto ids = [](const std::vector<TermId> &v) {
    json out = json::array();
    for (const TermId &x : v) out.push_back(x.str());
    return out;
  };
  json out = {{"id", t->id.str()},
              {"name", t->name},
              {"namespace", t->name_space},
              {"obsolete", t->obsolete},
              {"synonyms", t->synonyms},
              {"is_a_parents", ids(t->is_a_parents)},
              {"part_of_parents", ids(t->part_of_parents)},
              {"is_a_ancestors",
               AncestorChain(inputs_.graph, term_id, Relations::IsA())},
              {"part_of_ancestors",
               ids(inputs_.graph.PartOfAncestors(term_id,
                                                 options_.filter.part_of_mode))},
              {"ancestors",
               AncestorChain(inputs_.graph, term_id, Relations::Both())}};
  return out.dump();
}

std::string CurationService::DecisionsJson() const {
  json out = json::array();
  for (const CurationDecision &d : Decisions()) out.push_back(DecisionJson(d));
  return out.dump();
}

std::string CurationService::ReportJson() const {
  std::shared_lock lock(mu_);
  return RenderReportJson(state_, inputs_.graph);
}

struct CurationServer::Impl {
  CurationService *service;
  httplib::Server server;
  std::thread thread;
  std::mutex mu;
  std::condition_variable stopped_cv;
  bool stopped = false;
};

CurationServer::CurationServer(CurationService *service)
    : impl_(std::make_unique<Impl>()) {
  impl_->service = service;
  httplib::Server &srv = impl_->server;
  const char *kJson = "application/json";

  srv.Get("/frames", [service, kJson](const httplib::Request &,
                                      httplib::Response &res) {
    res.set_content(service->FramesJson(), kJson);
  });
  srv.Get("/assignments", [service, kJson](const httplib::Request &,
                                           httplib::Response &res) {
    res.set_content(service->AssignmentsJson(), kJson);
  });
  srv.Get("/candidates", [service, kJson](const httplib::Request &req,
                                          httplib::Response &res) {
    res.set_content(service->CandidatesJson(req.get_param_value("frame"),
                                            req.get_param_value("status")),
                    kJson);
  });
  srv.Get(R"(/terms/(.+))", [service, kJson](const httplib::Request &req,
                                             httplib::Response &res) {
    auto body = service->TermJson(req.matches[1]);
    if (!body) {
      res.status = 404;
      res.set_content(json{{"error", "unknown term"}}.dump(), kJson);
      return;
    }
    res.set_content(*body, kJson);
  });
  srv.Get("/decisions", [service, kJson](const httplib::Request &,
                                         httplib::Response &res) {
    res.set_content(service->DecisionsJson(), kJson);
  });
  srv.Post("/decisions", [service, kJson](const httplib::Request &req,
                                          httplib::Response &res) {
    CurationDecision decision;
    try {
      decision = DecisionFromJson(req.body, /*require_timestamp=*/false);
    } catch (const Error &e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), kJson);
      return;
    }
    try {
      CurationDecision stored = service->Submit(std::move(decision));
      res.status = 201;
      res.set_content(DecisionToJsonLine(stored), kJson);
    } catch (const Error &e) {
      res.status = 422;
      res.set_content(json{{"error", e.what()}}.dump(), kJson);
    }
  });
  srv.Get("/report", [service, kJson](const httplib::Request &,
                                      httplib::Response &res) {
    res.set_content(service->ReportJson(), kJson);
  });
}

CurationServer::~CurationServer() { Stop(); }

int CurationServer::Start(const std::string &host, int port) {
  int bound = port;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw InputError("cannot bind " + host);
  } else if (!impl_->server.bind_to_port(host, port)) {
    throw InputError("cannot bind " + host + ":" + std::to_string(port));
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void CurationServer::Wait() {
  std::unique_lock lock(impl_->mu);
  impl_->stopped_cv.wait(lock, [this] { return impl_->stopped; });
}

void CurationServer::Stop() {
  if (impl_->server.is_running()) impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
  {
    std::lock_guard lock(impl_->mu);
    impl_->stopped = true;
  }
  impl_->stopped_cv.notify_all();
}

}  // namespace framealign

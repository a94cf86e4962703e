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

// Review service for pipeline output. Decisions are appended to a JSON Lines
// log; the curated state is always RunPipeline(inputs, log), so restarting
// the service on the same log reproduces it.
//
// HTTP API:
//   GET  /frames
//   GET  /assignments
//   GET  /candidates?frame=&status=
//   GET  /terms/{id}
//   GET  /decisions
//   POST /decisions   body: decision without timestamp
//   GET  /report

#ifndef FRAMEALIGN_CURATION_H_
#define FRAMEALIGN_CURATION_H_

#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <thread>
#include <vector>

#include "framealign/pipeline.h"

namespace framealign {

class CurationService {
 public:
  using Clock = std::function<std::string()>;

  // Replays the log at log_path (missing file = empty log). Unknown keys in
  // the log are skipped and reported in the result warnings.
  CurationService(PipelineInputs inputs, PipelineOptions options,
                  std::filesystem::path log_path, Clock clock = nullptr);

  // Validates the decision against the current state, stamps it, appends
  // it to the log and recomputes the state. Throws InputError for unknown
  // keys or a missing curator.
  CurationDecision Submit(CurationDecision decision);

  PipelineResult Snapshot() const;
  std::vector<CurationDecision> Decisions() const;
  const PipelineInputs &inputs() const { return inputs_; }
  const std::filesystem::path &log_path() const { return log_path_; }

  // JSON payloads served by the HTTP routes.
  std::string FramesJson() const;
  std::string AssignmentsJson() const;
  std::string CandidatesJson(const std::string &frame,
                             const std::string &status) const;
  // nullopt for unknown or malformed ids.
  std::optional<std::string> TermJson(const std::string &id) const;
  std::string DecisionsJson() const;
  std::string ReportJson() const;

 private:
  PipelineInputs inputs_;
  PipelineOptions options_;
  std::filesystem::path log_path_;
  Clock clock_;

  mutable std::shared_mutex mu_;
  std::vector<CurationDecision> decisions_;
  PipelineResult state_;
};

// HTTP front end for a CurationService.
class CurationServer {
 public:
  explicit CurationServer(CurationService *service);
  ~CurationServer();

  CurationServer(const CurationServer &) = delete;
  CurationServer &operator=(const CurationServer &) = delete;

  // Binds (port 0 picks a free port) and serves on a background thread.
  // Returns the bound port; throws InputError if binding fails.
  int Start(const std::string &host, int port);
  // Blocks until Stop() is called from another thread.
  void Wait();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace framealign

#endif  // FRAMEALIGN_CURATION_H_

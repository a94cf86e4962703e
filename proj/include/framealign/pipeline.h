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

#ifndef FRAMEALIGN_PIPELINE_H_
#define FRAMEALIGN_PIPELINE_H_

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "framealign/aligner.h"
#include "framealign/lexframes.h"
#include "framealign/morph.h"
#include "framealign/ontology.h"

namespace framealign {

inline constexpr char kToolVersion[] = "frame-align 0.1.0";

struct PipelineConfig {
  std::filesystem::path obo;
  std::filesystem::path frames;
  std::filesystem::path verbs;
  std::filesystem::path lexicon;
  std::filesystem::path overrides;  // optional
  std::filesystem::path decisions;  // optional
  std::string name_space = "biological_process";
  bool match_noun_lus = false;
  FilterScope scope = FilterScope::kWithinFrame;
  bool partof_pure = false;
  bool lenient = false;
};

struct PipelineOptions {
  GenerateOptions generate;
  FilterOptions filter;
  CurationMode curation = CurationMode::kStrict;
};

PipelineOptions OptionsFromConfig(const PipelineConfig &config);

struct PipelineInputs {
  OntologyGraph graph;
  FrameIndex index;
  std::vector<VerbEntry> verbs;
  DerivationLexicon lexicon;
  HeadOverrides overrides;
  Provenance provenance;
};

// Loads every configured input except the decision file. Failures are
// rethrown with the failing stage named in the message.
PipelineInputs LoadInputs(const PipelineConfig &config);

struct PipelineResult {
  std::vector<FrameAssignment> assignments;
  std::set<std::string> accepted_frames;
  std::vector<MappingCandidate> candidates;
  MappingReport report;
  // Decisions skipped in lenient mode.
  std::vector<std::string> warnings;

  bool operator==(const PipelineResult &other) const = default;
};

// assign -> stage-1 curation -> generate -> filter -> stage-2 curation ->
// classify.
PipelineResult RunPipeline(const PipelineInputs &inputs,
                           const PipelineOptions &options,
                           const std::vector<CurationDecision> &decisions);

// Canonical JSON report: keys sorted, assignments by (verb, frame),
// candidates and final mappings by (frame, term).
std::string RenderReportJson(const PipelineResult &result,
                             const OntologyGraph &graph);

// term_id, term_name, frame, status, evidence; one row per candidate.
std::string RenderReportTsv(const PipelineResult &result,
                            const OntologyGraph &graph);

// Human-readable per-frame case summary.
std::string RenderCaseSummary(const PipelineResult &result,
                              const OntologyGraph &graph);

}  // namespace framealign

#endif  // FRAMEALIGN_PIPELINE_H_

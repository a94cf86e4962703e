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

#include "framealign/pipeline.h"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <tuple>

#include "framealign/error.h"
#include "framealign/util.h"

namespace framealign {

using nlohmann::json;

namespace {

// Runs fn, prefixing any Error with the stage name.
template <typename Fn>
auto Stage(const char *name, Fn &&fn) {
  try {
    return fn();
  } catch (const Error &e) {
    throw Error(e.kind(), std::string("stage '") + name + "': " + e.what());
  }
}

std::string ReadTracked(const char *role, const std::filesystem::path &path,
                        Provenance &provenance) {
  std::string data = ReadFile(path);
  provenance.inputs[role] = {path.string(), Sha256Hex(data)};
  return data;
}

std::string TermName(const OntologyGraph &graph, const TermId &id) {
  const Term *t = graph.Find(id);
  return t == nullptr ? std::string() : t->name;
}

json EvidenceJson(const std::vector<Evidence> &evidence) {
  json out = json::array();
  for (const Evidence &e : evidence) {
    out.push_back({{"head", e.head}, {"verb", e.verb}, {"via", ToString(e.via)}});
  }
  return out;
}

json ReasonJson(const std::optional<FilterReason> &reason) {
  if (!reason) return nullptr;
  return {{"rule", ToString(reason->rule)}, {"blocker", reason->blocker.str()}};
}

std::vector<const MappingCandidate *> ByFrameThenTerm(
    const std::vector<MappingCandidate> &candidates) {
  std::vector<const MappingCandidate *> sorted;
  for (const MappingCandidate &c : candidates) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(),
            [](const MappingCandidate *a, const MappingCandidate *b) {
              return std::tie(a->frame, a->term) < std::tie(b->frame, b->term);
            });
  return sorted;
}

std::string Sanitize(std::string s) {
  for (char &c : s) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

PipelineOptions OptionsFromConfig(const PipelineConfig &config) {
  PipelineOptions options;
  options.generate.match_noun_lus = config.match_noun_lus;
  options.generate.name_space = config.name_space;
  options.filter.scope = config.scope;
  options.filter.part_of_mode =
      config.partof_pure ? PartOfMode::kPure : PartOfMode::kMixed;
  options.curation =
      config.lenient ? CurationMode::kLenient : CurationMode::kStrict;
  return options;
}

PipelineInputs LoadInputs(const PipelineConfig &config) {
  if (config.name_space.empty()) {
    throw InputError("namespace filter must not be empty");
  }
  PipelineInputs in;
  Provenance &prov = in.provenance;
  prov.tool_version = kToolVersion;
  prov.config = {
      {"namespace", config.name_space},
      {"match_noun_lus", config.match_noun_lus ? "true" : "false"},
      {"scope", std::string(ToString(config.scope))},
      {"partof_pure", config.partof_pure ? "true" : "false"},
      {"lenient", config.lenient ? "true" : "false"},
  };
  const ParseMode mode = config.lenient ? ParseMode::kLenient : ParseMode::kStrict;
  in.graph = Stage("parse", [&] {
    return ParseObo(std::string_view(ReadTracked("obo", config.obo, prov)), mode);
  });
  in.index = Stage("frames", [&] {
    return ParseFrameIndex(ReadTracked("frames", config.frames, prov));
  });
  in.verbs = Stage("verbs", [&] {
    return ParseVerbList(ReadTracked("verbs", config.verbs, prov));
  });
  in.lexicon = Stage("lexicon", [&] {
    return ParseDerivationLexicon(ReadTracked("lexicon", config.lexicon, prov));
  });
  if (!config.overrides.empty()) {
    in.overrides = Stage("overrides", [&] {
      return ParseHeadOverrides(ReadTracked("overrides", config.overrides, prov));
    });
  }
  return in;
}

PipelineResult RunPipeline(const PipelineInputs &inputs,
                           const PipelineOptions &options,
                           const std::vector<CurationDecision> &decisions) {
  PipelineResult result;
  result.assignments = Stage("assign", [&] {
    return ApplyAssignmentCuration(AssignFramesToVerbs(inputs.verbs, inputs.index),
                                   decisions, options.curation, &result.warnings);
  });
  result.accepted_frames = AcceptedFrames(result.assignments);
  auto candidates = Stage("generate", [&] {
    return GenerateCandidates(inputs.graph, inputs.index, result.accepted_frames,
                              inputs.lexicon, inputs.overrides, options.generate);
  });
  candidates = Stage("filter", [&] {
    return FilterCandidates(inputs.graph, std::move(candidates), options.filter);
  });
  result.candidates = Stage("curate", [&] {
    return ApplyCuration(std::move(candidates), decisions, options.curation,
                         &result.warnings);
  });
  result.report = ClassifyMappings(result.candidates, result.accepted_frames);
  result.report.provenance = inputs.provenance;
  return result;
}

std::string RenderReportJson(const PipelineResult &result,
                             const OntologyGraph &graph) {
  json doc;

  std::vector<const FrameAssignment *> assignments;
  for (const FrameAssignment &a : result.assignments) assignments.push_back(&a);
  std::stable_sort(assignments.begin(), assignments.end(),
                   [](const FrameAssignment *a, const FrameAssignment *b) {
                     return std::tie(a->verb, a->frame) < std::tie(b->verb, b->frame);
                   });
  doc["assignments"] = json::array();
  for (const FrameAssignment *a : assignments) {
    doc["assignments"].push_back({{"verb", a->verb},
                                  {"frame", a->frame},
                                  {"via", ToString(a->via)},
                                  {"matched_lemma", a->matched_lemma},
                                  {"status", ToString(a->status)}});
  }
  doc["accepted_frames"] = result.accepted_frames;

  doc["candidates"] = json::array();
  for (const MappingCandidate *c : ByFrameThenTerm(result.candidates)) {
    doc["candidates"].push_back({{"term", c->term.str()},
                                 {"term_name", TermName(graph, c->term)},
                                 {"frame", c->frame},
                                 {"status", ToString(c->status)},
                                 {"filter_reason", ReasonJson(c->filter_reason)},
                                 {"auto_status", ToString(c->auto_status)},
                                 {"auto_filter_reason",
                                  ReasonJson(c->auto_filter_reason)},
                                 {"evidence", EvidenceJson(c->evidence)}});
  }

  doc["final_mappings"] = json::array();
  for (const Mapping &m : result.report.final_mappings) {
    doc["final_mappings"].push_back({{"term", m.term.str()},
                                     {"term_name", TermName(graph, m.term)},
                                     {"frame", m.frame},
                                     {"status", ToString(m.status)},
                                     {"evidence", EvidenceJson(m.evidence)}});
  }

  doc["frame_cases"] = json::object();
  for (const auto &[frame, fc] : result.report.frame_cases) {
    json terms = json::array();
    for (const TermId &t : fc.terms) terms.push_back(t.str());
    doc["frame_cases"][frame] = {
        {"case", ToString(fc.label)}, {"terms", terms}, {"verbs", fc.verbs}};
  }

  doc["multi_frame_terms"] = json::object();
  for (const auto &[term, frames] : result.report.multi_frame_terms) {
    doc["multi_frame_terms"][term.str()] = frames;
  }

  const Provenance &p = result.report.provenance;
  json inputs = json::object();
  for (const auto &[role, file] : p.inputs) {
    inputs[role] = {{"path", file.first}, {"sha256", file.second}};
  }
  doc["provenance"] = {
      {"tool_version", p.tool_version}, {"inputs", inputs}, {"config", p.config}};
  doc["warnings"] = result.warnings;
  return doc.dump(2) + "\n";
}

std::string RenderReportTsv(const PipelineResult &result,
                            const OntologyGraph &graph) {
  std::ostringstream out;
  const Provenance &p = result.report.provenance;
  out << "# " << p.tool_version;
  for (const auto &[role, file] : p.inputs) {
    out << " " << role << "=" << file.second.substr(0, 16);
  }
  out << "\n";
  out << "term_id\tterm_name\tframe\tstatus\tevidence\n";
  for (const MappingCandidate *c : ByFrameThenTerm(result.candidates)) {
    std::string evidence;
    for (const Evidence &e : c->evidence) {
      if (!evidence.empty()) evidence += ";";
      evidence += e.head + ">" + e.verb + ":" + std::string(ToString(e.via));
    }
    out << c->term.str() << '\t' << Sanitize(TermName(graph, c->term)) << '\t'
        << c->frame << '\t' << ToString(c->status) << '\t' << evidence << '\n';
  }
  return out.str();
}

std::string RenderCaseSummary(const PipelineResult &result,
                              const OntologyGraph &graph) {
  std::ostringstream out;
  for (const auto &[frame, fc] : result.report.frame_cases) {
    out << frame << ": " << ToString(fc.label);
    if (!fc.verbs.empty()) {
      out << " (via";
      for (const std::string &v : fc.verbs) out << " " << v;
      out << ")";
    }
    out << "\n";
    for (const TermId &t : fc.terms) {
      out << "  " << t.str() << " " << TermName(graph, t) << "\n";
    }
  }
  if (!result.report.multi_frame_terms.empty()) {
    out << "terms mapping to multiple frames:\n";
    for (const auto &[term, frames] : result.report.multi_frame_terms) {
      out << "  " << term.str() << " " << TermName(graph, term) << ":";
      for (const std::string &f : frames) out << " " << f;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace framealign

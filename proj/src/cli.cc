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

#include "framealign/cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <csignal>
#include <thread>
#include <json.hpp>

#include "framealign/curation.h"
#include "framealign/decision_log.h"
#include "framealign/error.h"
#include "framealign/pipeline.h"
#include "framealign/util.h"

#ifndef FRAMEALIGN_DEFAULT_LEXICON
#define FRAMEALIGN_DEFAULT_LEXICON ""
#endif

namespace framealign {

namespace {

using nlohmann::json;

namespace fs = std::filesystem;

void RequireFile(const fs::path &path, const char *flag) {
  if (path.empty()) throw InputError(std::string(flag) + " is required");
  if (!fs::exists(path)) {
    throw InputError(std::string(flag) + " " + path.string() + " does not exist");
  }
}

// JSON and TSV destinations derived from --out.
std::pair<fs::path, fs::path> ReportPaths(const fs::path &out) {
  fs::path json_path = out, tsv_path = out;
  if (out.extension() == ".json") {
    tsv_path.replace_extension(".tsv");
  } else {
    json_path += ".json";
    tsv_path += ".tsv";
  }
  return {json_path, tsv_path};
}

struct Flags {
  PipelineConfig config;
  std::string scope = "within-frame";
  fs::path out;
  fs::path log;
  int port = 8080;
  std::string host = "127.0.0.1";
};

void AddInputFlags(CLI::App *cmd, Flags &f, bool ontology, bool lexicon) {
  if (ontology) cmd->add_option("--obo", f.config.obo, "OBO ontology file");
  cmd->add_option("--frames", f.config.frames, "frame index JSON");
  cmd->add_option("--verbs", f.config.verbs, "domain verb list");
  cmd->add_option("--decisions", f.config.decisions, "curation decision file");
  cmd->add_flag("--lenient", f.config.lenient,
                "drop dangling parents and skip unknown decisions");
  if (!lexicon) return;
  cmd->add_option("--lexicon", f.config.lexicon, "derivation lexicon JSON");
  cmd->add_option("--overrides", f.config.overrides, "head override JSON");
  cmd->add_option("--namespace", f.config.name_space,
                  "ontology namespace to align");
  cmd->add_flag("--match-noun-lus", f.config.match_noun_lus,
                "also match head nouns against nominal lexical units");
  cmd->add_option("--scope", f.scope, "filter scope: within-frame|global")
      ->check(CLI::IsMember({"within-frame", "global"}));
  cmd->add_flag("--partof-pure", f.config.partof_pure,
                "follow only part_of edges for the partonomy rule");
}

std::vector<CurationDecision> LoadDecisions(PipelineConfig &config,
                                            Provenance &provenance) {
  if (config.decisions.empty()) return {};
  RequireFile(config.decisions, "--decisions");
  std::string text = ReadFile(config.decisions);
  provenance.inputs["decisions"] = {config.decisions.string(), Sha256Hex(text)};
  try {
    return ParseDecisionLog(text);
  } catch (const Error &e) {
    throw Error(e.kind(), std::string("stage 'decisions': ") + e.what());
  }
}

PipelineInputs LoadChecked(Flags &f) {
  f.config.scope = ParseFilterScope(f.scope);
  if (f.config.lexicon.empty()) f.config.lexicon = FRAMEALIGN_DEFAULT_LEXICON;
  RequireFile(f.config.obo, "--obo");
  RequireFile(f.config.frames, "--frames");
  RequireFile(f.config.verbs, "--verbs");
  RequireFile(f.config.lexicon, "--lexicon");
  if (!f.config.overrides.empty()) RequireFile(f.config.overrides, "--overrides");
  return LoadInputs(f.config);
}

int CmdParse(Flags &f, std::ostream &out, std::ostream &err) {
  RequireFile(f.config.obo, "--obo");
  OntologyGraph graph = LoadObo(
      f.config.obo, f.config.lenient ? ParseMode::kLenient : ParseMode::kStrict);
  for (const std::string &w : graph.warnings()) err << "warning: " << w << "\n";
  size_t obsolete = 0;
  for (const Term &t : graph.terms()) obsolete += t.obsolete ? 1 : 0;
  out << "terms: " << graph.size() << "\n"
      << "is_a edges: " << graph.is_a_edge_count() << "\n"
      << "part_of edges: " << graph.part_of_edge_count() << "\n"
      << "obsolete terms: " << obsolete << "\n"
      << "cycle check: ok\n";
  return 0;
}

int CmdAssign(Flags &f, std::ostream &out) {
  RequireFile(f.config.frames, "--frames");
  RequireFile(f.config.verbs, "--verbs");
  Provenance provenance;
  provenance.tool_version = kToolVersion;
  std::string frames_text = ReadFile(f.config.frames);
  std::string verbs_text = ReadFile(f.config.verbs);
  provenance.inputs["frames"] = {f.config.frames.string(), Sha256Hex(frames_text)};
  provenance.inputs["verbs"] = {f.config.verbs.string(), Sha256Hex(verbs_text)};
  FrameIndex index = ParseFrameIndex(frames_text);
  auto verbs = ParseVerbList(verbs_text);
  auto decisions = LoadDecisions(f.config, provenance);

  std::vector<std::string> warnings;
  auto assignments = ApplyAssignmentCuration(
      AssignFramesToVerbs(verbs, index), decisions,
      f.config.lenient ? CurationMode::kLenient : CurationMode::kStrict,
      &warnings);

  json doc;
  doc["assignments"] = json::array();
  for (const FrameAssignment &a : assignments) {
    doc["assignments"].push_back({{"verb", a.verb},
                                  {"frame", a.frame},
                                  {"via", ToString(a.via)},
                                  {"matched_lemma", a.matched_lemma},
                                  {"status", ToString(a.status)}});
  }
  doc["accepted_frames"] = AcceptedFrames(assignments);
  json inputs = json::object();
  for (const auto &[role, file] : provenance.inputs) {
    inputs[role] = {{"path", file.first}, {"sha256", file.second}};
  }
  doc["provenance"] = {{"tool_version", provenance.tool_version},
                       {"inputs", inputs},
                       {"config", {{"lenient", f.config.lenient}}}};
  doc["warnings"] = warnings;
  std::string text = doc.dump(2) + "\n";
  if (f.out.empty()) {
    out << text;
  } else {
    WriteFileAtomically(f.out, text);
    out << assignments.size() << " assignments written to " << f.out.string()
        << "\n";
  }
  return 0;
}

int CmdMap(Flags &f, std::ostream &out, std::ostream &err) {
  PipelineInputs inputs = LoadChecked(f);
  auto decisions = LoadDecisions(f.config, inputs.provenance);
  PipelineResult result =
      RunPipeline(inputs, OptionsFromConfig(f.config), decisions);
  for (const std::string &w : result.warnings) err << "warning: " << w << "\n";
  auto [json_path, tsv_path] =
      ReportPaths(f.out.empty() ? fs::path("mapping_report") : f.out);
  WriteFileAtomically(json_path, RenderReportJson(result, inputs.graph));
  WriteFileAtomically(tsv_path, RenderReportTsv(result, inputs.graph));
  out << result.candidates.size() << " candidates, "
      << result.report.final_mappings.size() << " final mappings over "
      << result.report.frame_cases.size() << " frames\n"
      << "wrote " << json_path.string() << " and " << tsv_path.string() << "\n";
  return 0;
}

int CmdReport(Flags &f, std::ostream &out, std::ostream &err) {
  PipelineInputs inputs = LoadChecked(f);
  auto decisions = LoadDecisions(f.config, inputs.provenance);
  PipelineResult result =
      RunPipeline(inputs, OptionsFromConfig(f.config), decisions);
  for (const std::string &w : result.warnings) err << "warning: " << w << "\n";
  std::string summary = RenderCaseSummary(result, inputs.graph);
  if (f.out.empty()) {
    out << summary;
  } else {
    WriteFileAtomically(f.out, summary);
  }
  return 0;
}

volatile std::sig_atomic_t g_stop_requested = 0;

void HandleSignal(int) { g_stop_requested = 1; }

int CmdServe(Flags &f, std::ostream &out) {
  if (f.log.empty()) throw InputError("--log is required");
  PipelineInputs inputs = LoadChecked(f);
  CurationService service(std::move(inputs), OptionsFromConfig(f.config), f.log);
  CurationServer server(&service);
  int port = server.Start(f.host, f.port);
  out << "serving on http://" << f.host << ":" << port << " (log "
      << f.log.string() << ")" << std::endl;
  g_stop_requested = 0;
  std::signal(SIGINT, HandleSignal);
  std::signal(SIGTERM, HandleSignal);
  while (!g_stop_requested) {
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
  }
  server.Stop();
  out << "stopped" << std::endl;
  return 0;
}

int CmdExport(Flags &f, std::ostream &out) {
  if (f.log.empty()) throw InputError("--log is required");
  std::string text = ExportDecisionLog(f.log);
  if (f.out.empty()) {
    out << text;
  } else {
    WriteFileAtomically(f.out, text);
  }
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Align ontology concepts to semantic frames", "frame-align"};
  app.require_subcommand(1);
  Flags f;

  auto *parse = app.add_subcommand("parse", "parse an OBO file and print statistics");
  parse->add_option("--obo", f.config.obo, "OBO ontology file")->required();
  parse->add_flag("--lenient", f.config.lenient, "drop dangling parents");

  auto *assign = app.add_subcommand("assign", "link domain verbs to frames");
  AddInputFlags(assign, f, /*ontology=*/false, /*lexicon=*/false);
  assign->add_option("--out", f.out, "assignments JSON (default stdout)");

  auto *map = app.add_subcommand("map", "run the full alignment and write reports");
  AddInputFlags(map, f, true, true);
  map->add_option("--out", f.out, "report path (JSON; TSV written alongside)");

  auto *report = app.add_subcommand("report", "print the per-frame case summary");
  AddInputFlags(report, f, true, true);
  report->add_option("--out", f.out, "summary file (default stdout)");

  auto *serve = app.add_subcommand("serve", "run the curation HTTP service");
  AddInputFlags(serve, f, true, true);
  serve->add_option("--port", f.port, "listen port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", f.host, "listen address");
  serve->add_option("--log", f.log, "decision log (JSON Lines)");

  auto *exp = app.add_subcommand("export-decisions",
                                 "write the deduplicated decision file");
  exp->add_option("--log", f.log, "decision log (JSON Lines)")->required();
  exp->add_option("--out", f.out, "decision file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "frame-align: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::kInput);
  }

  const char *command = app.get_subcommands().front()->get_name().c_str();
  try {
    if (parse->parsed()) return CmdParse(f, out, err);
    if (assign->parsed()) return CmdAssign(f, out);
    if (map->parsed()) return CmdMap(f, out, err);
    if (report->parsed()) return CmdReport(f, out, err);
    if (serve->parsed()) return CmdServe(f, out);
    if (exp->parsed()) return CmdExport(f, out);
  } catch (const Error &e) {
    err << "frame-align " << command << ": " << e.what() << "\n";
    return e.exit_code();
  }
  return 0;
}

}  // namespace framealign

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

// Curation decision log: JSON Lines, one decision per line, e.g.
//
//   {"term":"GO:0010014","frame":"Process_start","verdict":"accept",
//    "rationale":"...","curator":"ht","timestamp":"2026-10-16T12:00:00.000Z"}
//
// Stage-1 decisions carry "verb" instead of "term". Blank lines and lines
// starting with '#' are ignored, so exported decision files (which start
// with a header comment) read back through the same parser.

#ifndef FRAMEALIGN_DECISION_LOG_H_
#define FRAMEALIGN_DECISION_LOG_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "framealign/aligner.h"

namespace framealign {

inline constexpr char kDecisionFileHeader[] = "# frame-align decisions v1";

std::string DecisionToJsonLine(const CurationDecision &decision);

// Parses one decision object. require_timestamp is false for API bodies.
CurationDecision DecisionFromJson(std::string_view json_text,
                                  bool require_timestamp = true);

// Corrupt lines throw InputError naming the line number.
std::vector<CurationDecision> ParseDecisionLog(std::string_view text);
// A missing file is an empty log.
std::vector<CurationDecision> ReadDecisionLog(const std::filesystem::path &path);

// Appends one line and flushes. Never rewrites earlier lines.
void AppendDecision(const std::filesystem::path &path,
                    const CurationDecision &decision);

// Last decision per key, sorted by key (assignments first), rendered with a
// header line. Equivalent to the full log under replay.
std::string ExportDecisions(const std::vector<CurationDecision> &decisions);
std::string ExportDecisionLog(const std::filesystem::path &log_path);

// Current UTC time, ISO-8601 with milliseconds.
std::string UtcTimestamp();

}  // namespace framealign

#endif  // FRAMEALIGN_DECISION_LOG_H_

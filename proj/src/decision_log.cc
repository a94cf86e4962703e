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

#include "framealign/decision_log.h"

#include <chrono>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <map>

#include "framealign/error.h"
#include "framealign/util.h"

namespace framealign {

using nlohmann::json;

std::string DecisionToJsonLine(const CurationDecision &d) {
  json j;
  if (const auto *a = std::get_if<AssignmentKey>(&d.key)) {
    j["verb"] = a->verb;
    j["frame"] = a->frame;
  } else {
    const auto &m = std::get<MappingKey>(d.key);
    j["term"] = m.term.str();
    j["frame"] = m.frame;
  }
  j["verdict"] = ToString(d.verdict);
  j["rationale"] = d.rationale;
  j["curator"] = d.curator;
  j["timestamp"] = d.timestamp;
  return j.dump();
}

CurationDecision DecisionFromJson(std::string_view json_text,
                                  bool require_timestamp) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("malformed decision: ") + e.what());
  }
  if (!j.is_object()) throw InputError("decision must be a JSON object");
  try {
    const bool has_verb = j.contains("verb");
    const bool has_term = j.contains("term");
    if (has_verb == has_term) {
      throw InputError("decision needs exactly one of 'verb' or 'term'");
    }
    std::string frame = j.at("frame").get<std::string>();
    if (frame.empty()) throw InputError("decision has an empty frame");
    DecisionKey key = has_verb
        ? DecisionKey(AssignmentKey{ToLower(j.at("verb").get<std::string>()), frame})
        : DecisionKey(MappingKey{TermId::Parse(j.at("term").get<std::string>()),
                                 frame});
    CurationDecision d{std::move(key),
                       ParseVerdict(j.at("verdict").get<std::string>()),
                       j.value("rationale", ""),
                       j.value("curator", ""),
                       j.value("timestamp", "")};
    if (require_timestamp && d.timestamp.empty()) {
      throw InputError("decision without timestamp");
    }
    return d;
  } catch (const json::exception &e) {
    throw InputError(std::string("malformed decision: ") + e.what());
  }
}

std::vector<CurationDecision> ParseDecisionLog(std::string_view text) {
  std::vector<CurationDecision> decisions;
  size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    try {
      decisions.push_back(DecisionFromJson(line));
    } catch (const Error &e) {
      throw InputError("decision log line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  return decisions;
}

std::vector<CurationDecision> ReadDecisionLog(const std::filesystem::path &path) {
  if (!std::filesystem::exists(path)) return {};
  return ParseDecisionLog(ReadFile(path));
}

void AppendDecision(const std::filesystem::path &path,
                    const CurationDecision &decision) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw InputError("cannot append to decision log " + path.string());
  out << DecisionToJsonLine(decision) << '\n';
  out.flush();
  if (!out) throw InputError("write failed for decision log " + path.string());
}

std::string ExportDecisions(const std::vector<CurationDecision> &decisions) {
  std::map<DecisionKey, const CurationDecision *> last;
  for (const CurationDecision &d : decisions) last[d.key] = &d;
  std::string out = std::string(kDecisionFileHeader) + "\n";
  for (const auto &[key, d] : last) {
    out += DecisionToJsonLine(*d);
    out += '\n';
  }
  return out;
}

std::string ExportDecisionLog(const std::filesystem::path &log_path) {
  if (!std::filesystem::exists(log_path)) {
    throw InputError("decision log " + log_path.string() + " does not exist");
  }
  return ExportDecisions(ParseDecisionLog(ReadFile(log_path)));
}

std::string UtcTimestamp() {
  using namespace std::chrono;
  auto now = system_clock::now();
  std::time_t seconds = system_clock::to_time_t(now);
  auto millis =
      duration_cast<milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm utc{};
  gmtime_r(&seconds, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%S", &utc);
  char full[48];
  std::snprintf(full, sizeof(full), "%s.%03lldZ", buffer,
                static_cast<long long>(millis));
  return full;
}

}  // namespace framealign

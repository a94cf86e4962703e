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

#include "framealign/lexframes.h"

#include <json.hpp>

#include "framealign/error.h"
#include "framealign/util.h"

namespace framealign {

using nlohmann::json;

PartOfSpeech ParsePartOfSpeech(std::string_view tag) {
  if (tag == "v") return PartOfSpeech::kVerb;
  if (tag == "n") return PartOfSpeech::kNoun;
  if (tag == "a") return PartOfSpeech::kAdjective;
  throw InputError("unknown part of speech '" + std::string(tag) + "'");
}

std::string_view PartOfSpeechTag(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kVerb:
      return "v";
    case PartOfSpeech::kNoun:
      return "n";
    case PartOfSpeech::kAdjective:
      return "a";
  }
  return "?";
}

FrameIndex FrameIndex::FromFrames(std::vector<Frame> frames) {
  FrameIndex index;
  for (Frame &frame : frames) {
    if (frame.name.empty()) throw InputError("frame without a name");
    std::string name = frame.name;
    if (!index.frames_.emplace(name, std::move(frame)).second) {
      throw InvariantError("duplicate frame " + name);
    }
  }
  for (const auto &[name, frame] : index.frames_) {
    for (const LexicalUnit &lu : frame.lexical_units) {
      index.lu_index_[lu].insert(name);
    }
  }
  return index;
}

const Frame *FrameIndex::Find(std::string_view name) const {
  auto it = frames_.find(std::string(name));
  return it == frames_.end() ? nullptr : &it->second;
}

std::set<std::string> FrameIndex::FramesForLexeme(std::string_view lemma,
                                                  PartOfSpeech pos) const {
  auto it = lu_index_.find(LexicalUnit{ToLower(lemma), pos});
  if (it == lu_index_.end()) return {};
  return it->second;
}

FrameIndex ParseFrameIndex(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("frame index: ") + e.what());
  }
  std::vector<Frame> frames;
  try {
    for (const json &f : doc.at("frames")) {
      Frame frame;
      frame.name = f.at("name").get<std::string>();
      frame.definition = f.value("definition", "");
      for (const json &lu : f.value("lexical_units", json::array())) {
        std::string lemma = ToLower(Trim(lu.at("lemma").get<std::string>()));
        if (lemma.empty()) {
          throw InputError("frame " + frame.name + ": empty lemma");
        }
        frame.lexical_units.insert(
            {lemma, ParsePartOfSpeech(lu.at("pos").get<std::string>())});
      }
      for (const json &fe : f.value("frame_elements", json::array())) {
        frame.frame_elements.push_back(fe.get<std::string>());
      }
      frames.push_back(std::move(frame));
    }
  } catch (const json::exception &e) {
    throw InputError(std::string("frame index: ") + e.what());
  }
  return FrameIndex::FromFrames(std::move(frames));
}

FrameIndex LoadFrameIndex(const std::filesystem::path &path) {
  return ParseFrameIndex(ReadFile(path));
}

std::vector<VerbEntry> ParseVerbList(std::string_view text) {
  std::vector<VerbEntry> entries;
  std::set<std::string> seen;
  size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto where = "line " + std::to_string(line_no) + ": ";
    auto segments = SplitAndTrim(line, '|');
    VerbEntry entry;
    entry.verb = ToLower(segments.front());
    if (entry.verb.empty() || SplitWhitespace(entry.verb).size() != 1 ||
        entry.verb.find(':') != std::string::npos) {
      throw InputError(where + "malformed verb '" + std::string(line) + "'");
    }
    for (size_t i = 1; i < segments.size(); ++i) {
      size_t colon = segments[i].find(':');
      if (colon == std::string::npos) {
        throw InputError(where + "expected 'key: values' after '|'");
      }
      std::string key(Trim(std::string_view(segments[i]).substr(0, colon)));
      auto values = SplitAndTrim(std::string_view(segments[i]).substr(colon + 1), ',');
      std::vector<std::string> *target = nullptr;
      if (key == "synonyms") {
        target = &entry.synonyms;
        for (auto &v : values) v = ToLower(v);
      } else if (key == "predicates") {
        target = &entry.predicates;
      } else if (key == "definition") {
        target = &entry.definition_words;
        for (auto &v : values) v = ToLower(v);
      } else {
        throw InputError(where + "unknown field '" + key + "'");
      }
      target->insert(target->end(), values.begin(), values.end());
    }
    if (!seen.insert(entry.verb).second) {
      throw InvariantError(where + "duplicate verb " + entry.verb);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<VerbEntry> LoadVerbList(const std::filesystem::path &path) {
  return ParseVerbList(ReadFile(path));
}

}  // namespace framealign

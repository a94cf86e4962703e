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

#ifndef FRAMEALIGN_LEXFRAMES_H_
#define FRAMEALIGN_LEXFRAMES_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace framealign {

enum class PartOfSpeech { kVerb, kNoun, kAdjective };

// "v", "n", "a". Throws InputError on anything else.
PartOfSpeech ParsePartOfSpeech(std::string_view tag);
std::string_view PartOfSpeechTag(PartOfSpeech pos);

struct LexicalUnit {
  std::string lemma;
  PartOfSpeech pos;

  auto operator<=>(const LexicalUnit &other) const = default;
  bool operator==(const LexicalUnit &other) const = default;
};

struct Frame {
  std::string name;
  std::string definition;
  std::set<LexicalUnit> lexical_units;
  std::vector<std::string> frame_elements;

  bool operator==(const Frame &other) const = default;
};

// Frames keyed by name plus the inverted (lemma, pos) -> frame names index.
class FrameIndex {
 public:
  FrameIndex() = default;

  // Throws InvariantError on duplicate frame names.
  static FrameIndex FromFrames(std::vector<Frame> frames);

  const std::map<std::string, Frame> &frames() const { return frames_; }
  size_t size() const { return frames_.size(); }
  const Frame *Find(std::string_view name) const;

  // Exact lookup; the lemma is lowercased first. Unknown lemmas yield {}.
  std::set<std::string> FramesForLexeme(std::string_view lemma,
                                        PartOfSpeech pos) const;

  const std::map<LexicalUnit, std::set<std::string>> &lu_index() const {
    return lu_index_;
  }

 private:
  std::map<std::string, Frame> frames_;
  std::map<LexicalUnit, std::set<std::string>> lu_index_;
};

// Frame-index JSON:
//   {"frames": [{"name", "definition", "lexical_units": [{"lemma", "pos"}],
//                "frame_elements": [...]}]}
FrameIndex ParseFrameIndex(std::string_view json_text);
FrameIndex LoadFrameIndex(const std::filesystem::path &path);

struct VerbEntry {
  std::string verb;
  std::vector<std::string> predicates;
  std::vector<std::string> synonyms;
  std::vector<std::string> definition_words;

  bool operator==(const VerbEntry &other) const = default;
};

// Verb list, one verb per line:
//   verb [| synonyms: a, b] [| predicates: p1, p2] [| definition: w1, w2]
// Lines starting with '#' are comments. Duplicate verbs throw
// InvariantError.
std::vector<VerbEntry> ParseVerbList(std::string_view text);
std::vector<VerbEntry> LoadVerbList(const std::filesystem::path &path);

}  // namespace framealign

#endif  // FRAMEALIGN_LEXFRAMES_H_

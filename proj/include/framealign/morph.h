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

// Head-noun extraction for ontology concept names and noun <-> verb
// derivation (translation <-> translate, growth <-> grow).

#ifndef FRAMEALIGN_MORPH_H_
#define FRAMEALIGN_MORPH_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "framealign/ontology.h"

namespace framealign {

struct SuffixRule {
  std::string suffix;   // noun ending, never empty
  std::string replace;  // verb ending, may be empty

  bool operator==(const SuffixRule &other) const = default;
};

// Irregular noun/verb pairs plus ordered suffix rewrite rules.
class DerivationLexicon {
 public:
  DerivationLexicon() = default;

  // Exceptions are (noun, verbs) entries; repeated nouns are merged.
  // Throws InputError for empty words or rules with an empty suffix.
  DerivationLexicon(
      const std::vector<std::pair<std::string, std::vector<std::string>>>
          &exceptions,
      std::vector<SuffixRule> rules);

  const std::map<std::string, std::vector<std::string>> &noun_to_verbs() const {
    return noun_to_verbs_;
  }
  const std::map<std::string, std::vector<std::string>> &verb_to_nouns() const {
    return verb_to_nouns_;
  }
  const std::vector<SuffixRule> &suffix_rules() const { return rules_; }

 private:
  std::map<std::string, std::vector<std::string>> noun_to_verbs_;
  std::map<std::string, std::vector<std::string>> verb_to_nouns_;
  std::vector<SuffixRule> rules_;
};

// {"exceptions": [{"noun", "verbs": [...]}], "suffix_rules": [{"suffix",
// "replace"}]}
DerivationLexicon ParseDerivationLexicon(std::string_view json_text);
DerivationLexicon LoadDerivationLexicon(const std::filesystem::path &path);

// Head tokens of a concept name, lowercased.
//
// GO names are head-final noun phrases, so the head is the rightmost token.
// A prepositional complement ("prevention of polyspermy") is cut off first:
// the head is taken from the tokens before the first preposition. Within
// that region, top-level coordination ("and", "or", "and/or", ",") splits
// the phrase into conjuncts. A non-final conjunct contributes its own head
// when its last token looks like a noun and either the conjunct has two or
// more tokens ("antigen processing and presentation") or the whole region
// is a bare "X and Y". Otherwise the coordination is read as modifiers
// sharing one head ("peptide or protein amino-terminal blocking"). A
// trailing single-token adjectival qualifier after a comma
// ("transcription, DNA-dependent") is dropped.
//
// Throws InputError if the name has no tokens.
std::vector<std::string> ExtractHeads(std::string_view name);

// Candidate verb lemmas for a noun. An exception entry wins outright;
// otherwise every applicable suffix rule contributes one candidate, in rule
// order. The result has no duplicates and may be empty.
std::vector<std::string> Denominalize(std::string_view noun,
                                      const DerivationLexicon &lexicon);

// Inverse of Denominalize over the same exceptions and rules.
std::vector<std::string> Nominalize(std::string_view verb,
                                    const DerivationLexicon &lexicon);

// Curator-pinned heads, replacing ExtractHeads for the listed terms.
using HeadOverrides = std::map<TermId, std::vector<std::string>>;

// JSON object mapping term id to a list of head strings.
HeadOverrides ParseHeadOverrides(std::string_view json_text);
HeadOverrides LoadHeadOverrides(const std::filesystem::path &path);

}  // namespace framealign

#endif  // FRAMEALIGN_MORPH_H_

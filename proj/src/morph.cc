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

#include "framealign/morph.h"

#include <algorithm>
#include <array>
#include <json.hpp>

#include "framealign/error.h"
#include "framealign/util.h"

namespace framealign {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 27> kPrepositions = {
    "of",      "by",      "in",     "via",    "to",      "from",   "during",
    "involved", "with",   "into",   "on",     "at",      "for",    "through",
    "within",  "upon",    "toward", "towards", "between", "against", "across",
    "after",   "before",  "under",  "over",   "using",   "among"};

constexpr std::array<std::string_view, 3> kCoordinators = {"and", "or",
                                                           "and/or"};

// Endings of hyphenated compounds that act as modifiers.
constexpr std::array<std::string_view, 8> kCompoundModifierEndings = {
    "dependent", "independent", "specific", "mediated",
    "terminal",  "like",        "type",     "ed"};

constexpr std::array<std::string_view, 3> kAdjectiveEndings = {"ic", "ous",
                                                               "ive"};

template <size_t N>
bool Contains(const std::array<std::string_view, N> &words,
              std::string_view w) {
  return std::find(words.begin(), words.end(), w) != words.end();
}

bool LooksLikeNoun(std::string_view token) {
  if (token.find('-') != std::string_view::npos) {
    for (std::string_view ending : kCompoundModifierEndings) {
      if (EndsWith(token, ending)) return false;
    }
    return true;
  }
  for (std::string_view ending : kAdjectiveEndings) {
    if (token.size() > ending.size() + 2 && EndsWith(token, ending)) return false;
  }
  return true;
}

// Whitespace tokens with commas split off as their own tokens.
std::vector<std::string> Tokenize(std::string_view name) {
  std::vector<std::string> tokens;
  for (const std::string &raw : SplitWhitespace(name)) {
    std::string current;
    for (char c : raw) {
      if (c == ',') {
        if (!current.empty()) tokens.push_back(ToLower(current));
        current.clear();
        tokens.emplace_back(",");
      } else {
        current.push_back(c);
      }
    }
    if (!current.empty()) tokens.push_back(ToLower(current));
  }
  return tokens;
}

void AddUnique(std::vector<std::string> &out, std::string value) {
  if (std::find(out.begin(), out.end(), value) == out.end()) {
    out.push_back(std::move(value));
  }
}

}  // namespace

DerivationLexicon::DerivationLexicon(
    const std::vector<std::pair<std::string, std::vector<std::string>>>
        &exceptions,
    std::vector<SuffixRule> rules)
    : rules_(std::move(rules)) {
  for (const auto &[raw_noun, verbs] : exceptions) {
    std::string noun = ToLower(Trim(raw_noun));
    if (noun.empty()) throw InputError("derivation exception with empty noun");
    for (const std::string &raw_verb : verbs) {
      std::string verb = ToLower(Trim(raw_verb));
      if (verb.empty()) {
        throw InputError("derivation exception '" + noun + "' has empty verb");
      }
      AddUnique(noun_to_verbs_[noun], verb);
      AddUnique(verb_to_nouns_[verb], noun);
    }
  }
  for (const SuffixRule &rule : rules_) {
    if (rule.suffix.empty()) {
      throw InputError("suffix rule with empty suffix");
    }
  }
}

DerivationLexicon ParseDerivationLexicon(std::string_view json_text) {
  try {
    json doc = json::parse(json_text);
    std::vector<std::pair<std::string, std::vector<std::string>>> exceptions;
    for (const json &e : doc.value("exceptions", json::array())) {
      exceptions.emplace_back(e.at("noun").get<std::string>(),
                              e.at("verbs").get<std::vector<std::string>>());
    }
    std::vector<SuffixRule> rules;
    for (const json &r : doc.value("suffix_rules", json::array())) {
      rules.push_back({r.at("suffix").get<std::string>(),
                       r.at("replace").get<std::string>()});
    }
    return DerivationLexicon(exceptions, std::move(rules));
  } catch (const json::exception &e) {
    throw InputError(std::string("derivation lexicon: ") + e.what());
  }
}

DerivationLexicon LoadDerivationLexicon(const std::filesystem::path &path) {
  return ParseDerivationLexicon(ReadFile(path));
}

std::vector<std::string> ExtractHeads(std::string_view name) {
  const std::vector<std::string> tokens = Tokenize(name);
  if (std::all_of(tokens.begin(), tokens.end(),
                  [](const std::string &t) { return t == ","; })) {
    throw InputError("cannot extract head from empty name");
  }

  // Cut off the first prepositional complement.
  size_t region_end = tokens.size();
  for (size_t i = 1; i < tokens.size(); ++i) {
    if (Contains(kPrepositions, tokens[i])) {
      region_end = i;
      break;
    }
  }
  // A comma not followed by a coordinator introduces a qualifier
  // ("cell death, programmed").
  auto comma = std::find(tokens.begin(), tokens.begin() + region_end, ",");
  if (comma != tokens.begin() + region_end &&
      std::none_of(comma, tokens.begin() + region_end,
                   [](const std::string &t) { return Contains(kCoordinators, t); })) {
    region_end = comma - tokens.begin();
  }

  std::vector<std::vector<std::string>> conjuncts(1);
  bool only_and = true;
  for (size_t i = 0; i < region_end; ++i) {
    const std::string &tok = tokens[i];
    if (tok == "," || Contains(kCoordinators, tok)) {
      if (tok != "and" && tok != ",") only_and = false;
      if (!conjuncts.back().empty()) conjuncts.emplace_back();
    } else {
      conjuncts.back().push_back(tok);
    }
  }
  if (conjuncts.back().empty()) conjuncts.pop_back();
  if (conjuncts.empty()) {
    // Degenerate name: fall back to its last word.
    for (size_t i = tokens.size(); i-- > 0;) {
      if (tokens[i] != "," && !Contains(kCoordinators, tokens[i])) {
        return {tokens[i]};
      }
    }
    for (size_t i = tokens.size(); i-- > 0;) {
      if (tokens[i] != ",") return {tokens[i]};
    }
  }

  // "growth and death", "growth, differentiation and death".
  const bool bare_list =
      only_and && conjuncts.size() >= 2 &&
      std::all_of(conjuncts.begin(), conjuncts.end(),
                  [](const std::vector<std::string> &c) { return c.size() == 1; });
  std::vector<std::string> heads;
  for (size_t i = 0; i + 1 < conjuncts.size(); ++i) {
    const std::string &last = conjuncts[i].back();
    if (LooksLikeNoun(last) && (conjuncts[i].size() >= 2 || bare_list)) {
      AddUnique(heads, last);
    }
  }
  AddUnique(heads, conjuncts.back().back());
  return heads;
}

std::vector<std::string> Denominalize(std::string_view noun,
                                      const DerivationLexicon &lexicon) {
  std::string key = ToLower(noun);
  auto it = lexicon.noun_to_verbs().find(key);
  if (it != lexicon.noun_to_verbs().end()) return it->second;

  std::vector<std::string> verbs;
  for (const SuffixRule &rule : lexicon.suffix_rules()) {
    if (key.size() <= rule.suffix.size() || !EndsWith(key, rule.suffix)) continue;
    AddUnique(verbs, key.substr(0, key.size() - rule.suffix.size()) + rule.replace);
  }
  return verbs;
}

std::vector<std::string> Nominalize(std::string_view verb,
                                    const DerivationLexicon &lexicon) {
  std::string key = ToLower(verb);
  auto it = lexicon.verb_to_nouns().find(key);
  if (it != lexicon.verb_to_nouns().end()) return it->second;

  std::vector<std::string> nouns;
  for (const SuffixRule &rule : lexicon.suffix_rules()) {
    if (key.size() <= rule.replace.size() || !EndsWith(key, rule.replace)) {
      continue;
    }
    AddUnique(nouns, key.substr(0, key.size() - rule.replace.size()) + rule.suffix);
  }
  return nouns;
}

HeadOverrides ParseHeadOverrides(std::string_view json_text) {
  HeadOverrides overrides;
  try {
    json doc = json::parse(json_text);
    if (!doc.is_object()) throw InputError("head overrides must be a JSON object");
    for (const auto &[id, heads] : doc.items()) {
      std::vector<std::string> list;
      for (const json &h : heads) {
        std::string head = ToLower(Trim(h.get<std::string>()));
        if (head.empty()) throw InputError("empty head override for " + id);
        list.push_back(std::move(head));
      }
      if (list.empty()) throw InputError("no heads given for " + id);
      overrides.emplace(TermId::Parse(id), std::move(list));
    }
  } catch (const json::exception &e) {
    throw InputError(std::string("head overrides: ") + e.what());
  }
  return overrides;
}

HeadOverrides LoadHeadOverrides(const std::filesystem::path &path) {
  return ParseHeadOverrides(ReadFile(path));
}

}  // namespace framealign

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

#include "framealign/aligner.h"

#include <algorithm>
#include <array>
#include <tuple>
#include <utility>

#include "framealign/error.h"

namespace framealign {

namespace {

template <typename Enum, size_t N>
using NameTable = std::array<std::pair<Enum, std::string_view>, N>;

constexpr NameTable<AssignmentVia, 3> kAssignmentVia = {{
    {AssignmentVia::kDirectLu, "direct_lu"},
    {AssignmentVia::kSynonym, "synonym"},
    {AssignmentVia::kDefinitionWord, "definition_word"},
}};

constexpr NameTable<AssignmentStatus, 3> kAssignmentStatus = {{
    {AssignmentStatus::kCandidate, "candidate"},
    {AssignmentStatus::kAccepted, "accepted"},
    {AssignmentStatus::kDiscarded, "discarded"},
}};

constexpr NameTable<MatchVia, 2> kMatchVia = {{
    {MatchVia::kNominalization, "nominalization"},
    {MatchVia::kDirectNounLu, "direct_noun_lu"},
}};

constexpr NameTable<CandidateStatus, 5> kCandidateStatus = {{
    {CandidateStatus::kCandidate, "candidate"},
    {CandidateStatus::kAutoRetained, "auto_retained"},
    {CandidateStatus::kAutoFiltered, "auto_filtered"},
    {CandidateStatus::kAccepted, "accepted"},
    {CandidateStatus::kDiscarded, "discarded"},
}};

constexpr NameTable<FilterRule, 2> kFilterRule = {{
    {FilterRule::kSubclassOfCandidate, "subclass_of_candidate"},
    {FilterRule::kPartOfCandidate, "part_of_candidate"},
}};

constexpr NameTable<Verdict, 2> kVerdict = {{
    {Verdict::kAccept, "accept"},
    {Verdict::kDiscard, "discard"},
}};

constexpr NameTable<CaseLabel, 4> kCaseLabel = {{
    {CaseLabel::kNoMapping, "no_mapping"},
    {CaseLabel::kSingleMapping, "single_mapping"},
    {CaseLabel::kMultipleMultiVerb, "multiple_mapping_multi_verb"},
    {CaseLabel::kMultipleMultiSpecific, "multiple_mapping_multi_specific"},
}};

constexpr NameTable<FilterScope, 2> kFilterScope = {{
    {FilterScope::kWithinFrame, "within-frame"},
    {FilterScope::kGlobal, "global"},
}};

template <typename Enum, size_t N>
std::string_view NameOf(const NameTable<Enum, N> &table, Enum value) {
  for (const auto &[e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename Enum, size_t N>
Enum ValueOf(const NameTable<Enum, N> &table, std::string_view name,
             const char *what) {
  for (const auto &[e, n] : table) {
    if (n == name) return e;
  }
  throw InputError("unknown " + std::string(what) + " '" + std::string(name) +
                   "'");
}

template <typename Key>
std::map<Key, const CurationDecision *> LastDecisions(
    const std::vector<CurationDecision> &decisions) {
  std::map<Key, const CurationDecision *> last;
  for (const CurationDecision &d : decisions) {
    if (const Key *key = std::get_if<Key>(&d.key)) last[*key] = &d;
  }
  return last;
}

void ReportUnknown(const DecisionKey &key, CurationMode mode,
                   std::vector<std::string> *unknown) {
  std::string msg = "decision references unknown " + DescribeKey(key);
  if (mode == CurationMode::kStrict) throw InputError(msg);
  if (unknown != nullptr) unknown->push_back(msg);
}

}  // namespace

std::string_view ToString(AssignmentVia v) { return NameOf(kAssignmentVia, v); }
std::string_view ToString(AssignmentStatus v) { return NameOf(kAssignmentStatus, v); }
std::string_view ToString(MatchVia v) { return NameOf(kMatchVia, v); }
std::string_view ToString(CandidateStatus v) { return NameOf(kCandidateStatus, v); }
std::string_view ToString(FilterRule v) { return NameOf(kFilterRule, v); }
std::string_view ToString(Verdict v) { return NameOf(kVerdict, v); }
std::string_view ToString(CaseLabel v) { return NameOf(kCaseLabel, v); }
std::string_view ToString(FilterScope v) { return NameOf(kFilterScope, v); }

AssignmentVia ParseAssignmentVia(std::string_view s) {
  return ValueOf(kAssignmentVia, s, "assignment via");
}
AssignmentStatus ParseAssignmentStatus(std::string_view s) {
  return ValueOf(kAssignmentStatus, s, "assignment status");
}
MatchVia ParseMatchVia(std::string_view s) {
  return ValueOf(kMatchVia, s, "match via");
}
CandidateStatus ParseCandidateStatus(std::string_view s) {
  return ValueOf(kCandidateStatus, s, "candidate status");
}
FilterRule ParseFilterRule(std::string_view s) {
  return ValueOf(kFilterRule, s, "filter rule");
}
Verdict ParseVerdict(std::string_view s) { return ValueOf(kVerdict, s, "verdict"); }
CaseLabel ParseCaseLabel(std::string_view s) {
  return ValueOf(kCaseLabel, s, "case label");
}
FilterScope ParseFilterScope(std::string_view s) {
  return ValueOf(kFilterScope, s, "filter scope");
}

std::string DescribeKey(const DecisionKey &key) {
  if (const auto *a = std::get_if<AssignmentKey>(&key)) {
    return "assignment (" + a->verb + ", " + a->frame + ")";
  }
  const auto &m = std::get<MappingKey>(key);
  return "candidate (" + m.term.str() + ", " + m.frame + ")";
}

std::vector<FrameAssignment> AssignFramesToVerbs(
    const std::vector<VerbEntry> &verbs, const FrameIndex &index) {
  std::vector<FrameAssignment> out;
  for (const VerbEntry &entry : verbs) {
    auto collect = [&](const std::vector<std::string> &lemmas,
                       AssignmentVia via) {
      std::map<std::string, std::string> frames;  // frame -> first lemma
      for (const std::string &lemma : lemmas) {
        for (const std::string &f :
             index.FramesForLexeme(lemma, PartOfSpeech::kVerb)) {
          frames.emplace(f, lemma);
        }
      }
      for (const auto &[frame, lemma] : frames) {
        out.push_back({entry.verb, frame, via, lemma,
                       AssignmentStatus::kCandidate});
      }
      return !frames.empty();
    };
    if (collect({entry.verb}, AssignmentVia::kDirectLu)) continue;
    if (collect(entry.synonyms, AssignmentVia::kSynonym)) continue;
    collect(entry.definition_words, AssignmentVia::kDefinitionWord);
  }
  return out;
}

std::vector<FrameAssignment> ApplyAssignmentCuration(
    std::vector<FrameAssignment> assignments,
    const std::vector<CurationDecision> &decisions, CurationMode mode,
    std::vector<std::string> *unknown) {
  for (const auto &[key, decision] : LastDecisions<AssignmentKey>(decisions)) {
    bool found = false;
    for (FrameAssignment &a : assignments) {
      if (a.verb == key.verb && a.frame == key.frame) {
        a.status = decision->verdict == Verdict::kAccept
                       ? AssignmentStatus::kAccepted
                       : AssignmentStatus::kDiscarded;
        found = true;
      }
    }
    if (!found) ReportUnknown(key, mode, unknown);
  }
  return assignments;
}

std::set<std::string> AcceptedFrames(
    const std::vector<FrameAssignment> &assignments) {
  std::set<std::string> frames;
  for (const FrameAssignment &a : assignments) {
    if (a.status != AssignmentStatus::kDiscarded) frames.insert(a.frame);
  }
  return frames;
}

std::vector<MappingCandidate> GenerateCandidates(
    const OntologyGraph &graph, const FrameIndex &index,
    const std::set<std::string> &accepted_frames,
    const DerivationLexicon &lexicon, const HeadOverrides &overrides,
    const GenerateOptions &options) {
  std::map<std::pair<TermId, std::string>, std::set<Evidence>> found;
  auto emit = [&](const TermId &term, const std::set<std::string> &frames,
                  const Evidence &evidence) {
    for (const std::string &frame : frames) {
      if (accepted_frames.count(frame) == 0) continue;
      found[{term, frame}].insert(evidence);
    }
  };

  for (const Term &term : graph.terms()) {
    if (term.obsolete) continue;
    if (!options.name_space.empty() && term.name_space != options.name_space) {
      continue;
    }
    auto pinned = overrides.find(term.id);
    const std::vector<std::string> heads =
        pinned != overrides.end() ? pinned->second : ExtractHeads(term.name);
    for (const std::string &head : heads) {
      for (const std::string &verb : Denominalize(head, lexicon)) {
        emit(term.id, index.FramesForLexeme(verb, PartOfSpeech::kVerb),
             {head, verb, MatchVia::kNominalization});
      }
      if (options.match_noun_lus) {
        emit(term.id, index.FramesForLexeme(head, PartOfSpeech::kNoun),
             {head, head, MatchVia::kDirectNounLu});
      }
    }
  }

  std::vector<MappingCandidate> out;
  out.reserve(found.size());
  for (auto &[key, evidence] : found) {
    out.push_back({key.first, key.second,
                   std::vector<Evidence>(evidence.begin(), evidence.end()),
                   CandidateStatus::kCandidate, std::nullopt,
                   CandidateStatus::kCandidate, std::nullopt});
  }
  return out;
}

std::vector<MappingCandidate> FilterCandidates(
    const OntologyGraph &graph, std::vector<MappingCandidate> candidates,
    const FilterOptions &options) {
  std::map<std::string, std::set<TermId>> frame_terms;
  for (const MappingCandidate &c : candidates) {
    graph.Get(c.term);
    frame_terms[c.frame].insert(c.term);
  }

  // The first element of ancestors that is a blocker, if any.
  auto first_blocker = [&](const std::vector<TermId> &ancestors,
                           const std::set<TermId> *pool)
      -> std::optional<TermId> {
    for (const TermId &a : ancestors) {  // sorted ascending
      if (pool == nullptr || pool->count(a) > 0) return a;
    }
    return std::nullopt;
  };

  for (MappingCandidate &c : candidates) {
    if (c.status == CandidateStatus::kAccepted ||
        c.status == CandidateStatus::kDiscarded) {
      continue;
    }
    const std::set<TermId> *pool =
        options.scope == FilterScope::kWithinFrame ? &frame_terms[c.frame]
                                                   : nullptr;
    std::optional<FilterReason> reason;
    if (auto b = first_blocker(graph.Ancestors(c.term, Relations::IsA()), pool)) {
      reason = FilterReason{FilterRule::kSubclassOfCandidate, *b};
    } else if (auto p = first_blocker(
                   graph.PartOfAncestors(c.term, options.part_of_mode), pool)) {
      reason = FilterReason{FilterRule::kPartOfCandidate, *p};
    }
    c.status = reason ? CandidateStatus::kAutoFiltered
                      : CandidateStatus::kAutoRetained;
    c.filter_reason = reason;
    c.auto_status = c.status;
    c.auto_filter_reason = reason;
  }
  return candidates;
}

std::vector<MappingCandidate> ApplyCuration(
    std::vector<MappingCandidate> candidates,
    const std::vector<CurationDecision> &decisions, CurationMode mode,
    std::vector<std::string> *unknown) {
  for (const auto &[key, decision] : LastDecisions<MappingKey>(decisions)) {
    auto it = std::find_if(candidates.begin(), candidates.end(),
                           [&](const MappingCandidate &c) {
                             return c.term == key.term && c.frame == key.frame;
                           });
    if (it == candidates.end()) {
      ReportUnknown(key, mode, unknown);
      continue;
    }
    it->status = decision->verdict == Verdict::kAccept
                     ? CandidateStatus::kAccepted
                     : CandidateStatus::kDiscarded;
    it->filter_reason.reset();
  }
  return candidates;
}

MappingReport ClassifyMappings(const std::vector<MappingCandidate> &candidates,
                               const std::set<std::string> &frames) {
  MappingReport report;
  for (const std::string &f : frames) report.frame_cases[f];

  std::map<TermId, std::set<std::string>> frames_per_term;
  std::map<std::string, std::set<std::string>> lemmas_per_frame;
  for (const MappingCandidate &c : candidates) {
    if (c.status != CandidateStatus::kAutoRetained &&
        c.status != CandidateStatus::kAccepted) {
      continue;
    }
    report.final_mappings.push_back({c.term, c.frame, c.status, c.evidence});
    report.frame_cases[c.frame].terms.push_back(c.term);
    frames_per_term[c.term].insert(c.frame);
    for (const Evidence &e : c.evidence) lemmas_per_frame[c.frame].insert(e.verb);
  }
  std::sort(report.final_mappings.begin(), report.final_mappings.end(),
            [](const Mapping &a, const Mapping &b) {
              return std::tie(a.frame, a.term) < std::tie(b.frame, b.term);
            });

  for (auto &[frame, fc] : report.frame_cases) {
    std::sort(fc.terms.begin(), fc.terms.end());
    const auto &lemmas = lemmas_per_frame[frame];
    fc.verbs.assign(lemmas.begin(), lemmas.end());
    if (fc.terms.empty()) {
      fc.label = CaseLabel::kNoMapping;
    } else if (fc.terms.size() == 1) {
      fc.label = CaseLabel::kSingleMapping;
    } else if (fc.verbs.size() >= 2) {
      fc.label = CaseLabel::kMultipleMultiVerb;
    } else {
      fc.label = CaseLabel::kMultipleMultiSpecific;
    }
  }
  for (const auto &[term, fs] : frames_per_term) {
    if (fs.size() >= 2) {
      report.multi_frame_terms.emplace(term,
                                       std::vector<std::string>(fs.begin(), fs.end()));
    }
  }
  return report;
}

}  // namespace framealign

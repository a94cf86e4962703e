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

// Two-stage alignment of ontology concepts to semantic frames.
//
// Stage 1 links domain verbs to frames in which they are lexical units
// (falling back to curator-supplied synonyms, then definition words). Stage 2
// proposes a (term, frame) candidate whenever a head noun of the term name is
// a nominalization of a verbal lexical unit of an accepted frame, then marks
// candidates that are subsumed by, or part of, another candidate of the same
// frame. Curation decisions override automatic statuses in both stages.

#ifndef FRAMEALIGN_ALIGNER_H_
#define FRAMEALIGN_ALIGNER_H_

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "framealign/lexframes.h"
#include "framealign/morph.h"
#include "framealign/ontology.h"

namespace framealign {

enum class AssignmentVia { kDirectLu, kSynonym, kDefinitionWord };
enum class AssignmentStatus { kCandidate, kAccepted, kDiscarded };

struct FrameAssignment {
  std::string verb;
  std::string frame;
  AssignmentVia via = AssignmentVia::kDirectLu;
  // Lemma that matched the frame: the verb itself, a synonym or a
  // definition word.
  std::string matched_lemma;
  AssignmentStatus status = AssignmentStatus::kCandidate;

  bool operator==(const FrameAssignment &other) const = default;
};

enum class MatchVia { kNominalization, kDirectNounLu };

struct Evidence {
  std::string head;
  std::string verb;  // for kDirectNounLu, the noun lexical unit itself
  MatchVia via = MatchVia::kNominalization;

  auto operator<=>(const Evidence &other) const = default;
  bool operator==(const Evidence &other) const = default;
};

enum class CandidateStatus {
  kCandidate,
  kAutoRetained,
  kAutoFiltered,
  kAccepted,
  kDiscarded
};

enum class FilterRule { kSubclassOfCandidate, kPartOfCandidate };

struct FilterReason {
  FilterRule rule;
  TermId blocker;

  bool operator==(const FilterReason &other) const = default;
};

struct MappingCandidate {
  TermId term;
  std::string frame;
  std::vector<Evidence> evidence;  // sorted, never empty
  CandidateStatus status = CandidateStatus::kCandidate;
  // Present iff status == kAutoFiltered.
  std::optional<FilterReason> filter_reason;
  // What the automatic filter decided, kept when curation overrides status.
  CandidateStatus auto_status = CandidateStatus::kCandidate;
  std::optional<FilterReason> auto_filter_reason;

  bool operator==(const MappingCandidate &other) const = default;
};

// Curation decision keys: a stage-1 (verb, frame) assignment or a stage-2
// (term, frame) candidate.
struct AssignmentKey {
  std::string verb;
  std::string frame;

  auto operator<=>(const AssignmentKey &other) const = default;
  bool operator==(const AssignmentKey &other) const = default;
};

struct MappingKey {
  TermId term;
  std::string frame;

  auto operator<=>(const MappingKey &other) const = default;
  bool operator==(const MappingKey &other) const = default;
};

using DecisionKey = std::variant<AssignmentKey, MappingKey>;

enum class Verdict { kAccept, kDiscard };

struct CurationDecision {
  DecisionKey key;
  Verdict verdict = Verdict::kAccept;
  std::string rationale;
  std::string curator;
  std::string timestamp;  // ISO-8601 UTC, stamped by the curation service

  bool operator==(const CurationDecision &other) const = default;
};

// How unknown keys in a decision log are handled.
enum class CurationMode { kStrict, kLenient };

enum class FilterScope { kWithinFrame, kGlobal };

struct GenerateOptions {
  bool match_noun_lus = false;
  // Only terms in this namespace generate candidates; empty means all.
  std::string name_space;
};

struct FilterOptions {
  FilterScope scope = FilterScope::kWithinFrame;
  PartOfMode part_of_mode = PartOfMode::kMixed;
};

// Stage 1. For each verb, one assignment per frame listing (verb, v) as a
// lexical unit; if there are none, per frame listing one of its synonyms;
// if still none, per frame listing one of its definition words. Output is
// in verb-list order, frames alphabetical within a verb.
std::vector<FrameAssignment> AssignFramesToVerbs(
    const std::vector<VerbEntry> &verbs, const FrameIndex &index);

// Applies the assignment-keyed decisions (others are ignored), last decision
// per key wins. Unknown keys throw InputError in strict mode and are
// appended to *unknown in lenient mode.
std::vector<FrameAssignment> ApplyAssignmentCuration(
    std::vector<FrameAssignment> assignments,
    const std::vector<CurationDecision> &decisions, CurationMode mode,
    std::vector<std::string> *unknown = nullptr);

// Frames with at least one assignment that has not been discarded.
std::set<std::string> AcceptedFrames(
    const std::vector<FrameAssignment> &assignments);

// Stage 2 candidate generation over live terms. Output is sorted by
// (term, frame), one candidate per pair with merged evidence.
std::vector<MappingCandidate> GenerateCandidates(
    const OntologyGraph &graph, const FrameIndex &index,
    const std::set<std::string> &accepted_frames,
    const DerivationLexicon &lexicon, const HeadOverrides &overrides,
    const GenerateOptions &options = {});

// Marks each undecided candidate kAutoFiltered if another candidate of the
// same frame subsumes it (is_a) or contains it (part_of), and kAutoRetained
// otherwise. With kGlobal scope any ontology term counts as a blocker.
// Accepted and discarded candidates are left untouched. The blocker reported
// is the smallest qualifying term id; the subclass rule is checked first.
std::vector<MappingCandidate> FilterCandidates(
    const OntologyGraph &graph, std::vector<MappingCandidate> candidates,
    const FilterOptions &options = {});

// Applies the mapping-keyed decisions (others are ignored), last decision
// per key wins.
std::vector<MappingCandidate> ApplyCuration(
    std::vector<MappingCandidate> candidates,
    const std::vector<CurationDecision> &decisions, CurationMode mode,
    std::vector<std::string> *unknown = nullptr);

enum class CaseLabel {
  kNoMapping,
  kSingleMapping,
  kMultipleMultiVerb,
  kMultipleMultiSpecific
};

struct Mapping {
  TermId term;
  std::string frame;
  CandidateStatus status;
  std::vector<Evidence> evidence;

  bool operator==(const Mapping &other) const = default;
};

struct FrameCase {
  CaseLabel label = CaseLabel::kNoMapping;
  std::vector<TermId> terms;       // sorted
  std::vector<std::string> verbs;  // distinct matched lemmas, sorted

  bool operator==(const FrameCase &other) const = default;
};

struct Provenance {
  std::string tool_version;
  // Input role -> (path, sha256).
  std::map<std::string, std::pair<std::string, std::string>> inputs;
  std::map<std::string, std::string> config;

  bool operator==(const Provenance &other) const = default;
};

struct MappingReport {
  std::vector<Mapping> final_mappings;  // sorted by (frame, term)
  std::map<std::string, FrameCase> frame_cases;
  std::map<TermId, std::vector<std::string>> multi_frame_terms;
  Provenance provenance;

  bool operator==(const MappingReport &other) const = default;
};

// Final mappings are candidates with status kAutoRetained or kAccepted.
// Every name in frames gets a case label, including frames with no final
// mapping. Two or more distinct matched lemmas make a multiple-mapping
// frame kMultipleMultiVerb.
MappingReport ClassifyMappings(const std::vector<MappingCandidate> &candidates,
                               const std::set<std::string> &frames);

// Wire names.
std::string_view ToString(AssignmentVia via);
std::string_view ToString(AssignmentStatus status);
std::string_view ToString(MatchVia via);
std::string_view ToString(CandidateStatus status);
std::string_view ToString(FilterRule rule);
std::string_view ToString(Verdict verdict);
std::string_view ToString(CaseLabel label);
std::string_view ToString(FilterScope scope);

AssignmentVia ParseAssignmentVia(std::string_view s);
AssignmentStatus ParseAssignmentStatus(std::string_view s);
MatchVia ParseMatchVia(std::string_view s);
CandidateStatus ParseCandidateStatus(std::string_view s);
FilterRule ParseFilterRule(std::string_view s);
Verdict ParseVerdict(std::string_view s);
CaseLabel ParseCaseLabel(std::string_view s);
FilterScope ParseFilterScope(std::string_view s);

std::string DescribeKey(const DecisionKey &key);

}  // namespace framealign

#endif  // FRAMEALIGN_ALIGNER_H_

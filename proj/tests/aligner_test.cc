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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "framealign/error.h"
#include "oracles.h"
#include "test_util.h"

namespace framealign {
namespace {

using ::framealign::testing::DataDir;
using ::framealign::testing::FixtureDir;
using ::framealign::testing::MakeTerm;
using ::framealign::testing::TestDataDir;

TermId Id(const std::string &s) { return TermId::Parse(s); }

struct Fixture {
  OntologyGraph graph = LoadObo(FixtureDir() / "ontology.obo");
  FrameIndex index = LoadFrameIndex(FixtureDir() / "frames.json");
  std::vector<VerbEntry> verbs = LoadVerbList(FixtureDir() / "verbs.txt");
  DerivationLexicon lexicon =
      LoadDerivationLexicon(DataDir() / "derivation_lexicon.json");
  HeadOverrides overrides = LoadHeadOverrides(FixtureDir() / "overrides.json");
};

const Fixture &F() {
  static const Fixture f;
  return f;
}

std::set<std::string> AllFrames() {
  std::set<std::string> out;
  for (const auto &[name, frame] : F().index.frames()) out.insert(name);
  return out;
}

const MappingCandidate *FindCandidate(const std::vector<MappingCandidate> &cs,
                                      const std::string &term,
                                      const std::string &frame) {
  for (const MappingCandidate &c : cs) {
    if (c.term.str() == term && c.frame == frame) return &c;
  }
  return nullptr;
}

MappingCandidate Candidate(const std::string &term, const std::string &frame) {
  return {Id(term), frame, {{"h", "v", MatchVia::kNominalization}},
          CandidateStatus::kCandidate, std::nullopt,
          CandidateStatus::kCandidate, std::nullopt};
}

CurationDecision Decide(const std::string &term, const std::string &frame,
                        Verdict verdict) {
  return {MappingKey{Id(term), frame}, verdict, "", "tester", "t"};
}

// Stage 1.

TEST(AssignTest, DirectLu) {
  auto a = AssignFramesToVerbs(ParseVerbList("translate\n"), F().index);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].verb, "translate");
  EXPECT_EQ(a[0].frame, "Translating");
  EXPECT_EQ(a[0].via, AssignmentVia::kDirectLu);
  EXPECT_EQ(a[0].status, AssignmentStatus::kCandidate);
}

TEST(AssignTest, EmptyVerbList) {
  EXPECT_TRUE(AssignFramesToVerbs({}, F().index).empty());
}

TEST(AssignTest, SynonymFallbackOnlyWithoutDirectLu) {
  auto verbs = LoadVerbList(TestDataDir() / "synonym_fallback_verbs.txt");
  auto a = AssignFramesToVerbs(verbs, F().index);
  std::map<std::string, std::vector<FrameAssignment>> by_verb;
  for (const FrameAssignment &x : a) by_verb[x.verb].push_back(x);
  ASSERT_FALSE(by_verb["wane"].empty());
  for (const FrameAssignment &x : by_verb["wane"]) {
    EXPECT_EQ(x.via, AssignmentVia::kSynonym);
    EXPECT_EQ(x.matched_lemma, "decrease");
  }
  ASSERT_FALSE(by_verb["decrease"].empty());
  for (const FrameAssignment &x : by_verb["decrease"]) {
    EXPECT_EQ(x.via, AssignmentVia::kDirectLu);
  }

  // A synonym is ignored once the verb itself is an LU.
  auto direct = AssignFramesToVerbs(
      ParseVerbList("translate | synonyms: decrease\n"), F().index);
  ASSERT_EQ(direct.size(), 1u);
  EXPECT_EQ(direct[0].frame, "Translating");
}

TEST(AssignTest, DefinitionWordsAreLastResort) {
  auto a = AssignFramesToVerbs(
      ParseVerbList("quench | definition: stop, zzz\n"), F().index);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].frame, "Preventing");
  EXPECT_EQ(a[0].via, AssignmentVia::kDefinitionWord);
}

TEST(AssignTest, CurationAndAcceptedFrames) {
  auto a = AssignFramesToVerbs(ParseVerbList("decrease\n"), F().index);
  ASSERT_EQ(a.size(), 2u);
  std::vector<CurationDecision> d = {
      {AssignmentKey{"decrease", "Cause_change_of_position_on_a_scale"},
       Verdict::kDiscard, "", "c", "t"}};
  auto curated = ApplyAssignmentCuration(a, d, CurationMode::kStrict);
  EXPECT_EQ(AcceptedFrames(curated),
            std::set<std::string>{"Change_position_on_a_scale"});

  std::vector<CurationDecision> unknown = {
      {AssignmentKey{"decrease", "Translating"}, Verdict::kAccept, "", "c", "t"}};
  EXPECT_THROW(ApplyAssignmentCuration(a, unknown, CurationMode::kStrict), Error);
  std::vector<std::string> warnings;
  EXPECT_EQ(ApplyAssignmentCuration(a, unknown, CurationMode::kLenient, &warnings),
            a);
  EXPECT_EQ(warnings.size(), 1u);
}

// Candidate generation.

TEST(GenerateTest, NominalizationMatch) {
  OntologyGraph g = OntologyGraph::FromTerms(
      {MakeTerm("GO:0008283", "cell proliferation")});
  auto cs = GenerateCandidates(g, F().index, AllFrames(), F().lexicon, {});
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].frame, "Proliferation_in_number");
  EXPECT_EQ(cs[0].evidence,
            (std::vector<Evidence>{
                {"proliferation", "proliferate", MatchVia::kNominalization}}));
}

TEST(GenerateTest, NounLuMatchNeedsFlag) {
  OntologyGraph g = OntologyGraph::FromTerms(
      {MakeTerm("GO:0030727", "germarium-derived female germ-line cyst formation")});
  GenerateOptions noun{.match_noun_lus = true};
  auto with = GenerateCandidates(g, F().index, {"Creating"}, F().lexicon, {}, noun);
  ASSERT_EQ(with.size(), 1u);
  EXPECT_TRUE(std::count(with[0].evidence.begin(), with[0].evidence.end(),
                         Evidence{"formation", "formation", MatchVia::kDirectNounLu}));

  OntologyGraph cyst = OntologyGraph::FromTerms(
      {MakeTerm("GO:0000001", "cyst formation")});
  DerivationLexicon empty;
  EXPECT_TRUE(
      GenerateCandidates(cyst, F().index, {"Creating"}, empty, {}).empty());
  auto only_noun =
      GenerateCandidates(cyst, F().index, {"Creating"}, empty, {}, noun);
  ASSERT_EQ(only_noun.size(), 1u);
  EXPECT_EQ(only_noun[0].evidence[0].via, MatchVia::kDirectNounLu);
}

TEST(GenerateTest, UnmatchedHeadGivesNothing) {
  OntologyGraph g =
      OntologyGraph::FromTerms({MakeTerm("GO:0006915", "apoptosis")});
  EXPECT_TRUE(
      GenerateCandidates(g, F().index, AllFrames(), F().lexicon, {}).empty());
}

TEST(GenerateTest, NamespaceObsoleteAndAcceptedFrames) {
  Term obsolete = MakeTerm("GO:0000003", "obsolete translation");
  obsolete.obsolete = true;
  OntologyGraph g = OntologyGraph::FromTerms({
      MakeTerm("GO:0000001", "translation"),
      MakeTerm("GO:0000002", "translation", {}, {}, "molecular_function"),
      obsolete,
  });
  GenerateOptions bp{.name_space = "biological_process"};
  auto cs = GenerateCandidates(g, F().index, AllFrames(), F().lexicon, {}, bp);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].term.str(), "GO:0000001");
  EXPECT_EQ(GenerateCandidates(g, F().index, AllFrames(), F().lexicon, {}).size(),
            2u);
  EXPECT_TRUE(GenerateCandidates(g, F().index, {"Creating"}, F().lexicon, {}, bp)
                  .empty());
}

TEST(GenerateTest, OverridesReplaceExtractedHeads) {
  OntologyGraph g = OntologyGraph::FromTerms(
      {MakeTerm("GO:0032502", "developmental process")});
  EXPECT_FALSE(FindCandidate(
      GenerateCandidates(g, F().index, AllFrames(), F().lexicon, {}),
      "GO:0032502", "Progress"));
  auto cs = GenerateCandidates(g, F().index, AllFrames(), F().lexicon,
                               F().overrides);
  EXPECT_TRUE(FindCandidate(cs, "GO:0032502", "Progress"));
  EXPECT_FALSE(FindCandidate(cs, "GO:0032502", "Process"));
}

TEST(GenerateProperty, RemovingAcceptedFramesNeverAddsCandidates) {
  std::mt19937 rng(17);
  const std::set<std::string> all = AllFrames();
  std::vector<std::string> frames(all.begin(), all.end());
  auto full = GenerateCandidates(F().graph, F().index, AllFrames(), F().lexicon,
                                 F().overrides);
  for (int round = 0; round < 100; ++round) {
    std::set<std::string> subset;
    for (const std::string &f : frames) {
      if (rng() % 2) subset.insert(f);
    }
    auto part = GenerateCandidates(F().graph, F().index, subset, F().lexicon,
                                   F().overrides);
    for (const MappingCandidate &c : part) {
      ASSERT_TRUE(subset.count(c.frame));
      const MappingCandidate *same = FindCandidate(full, c.term.str(), c.frame);
      ASSERT_NE(same, nullptr);
      ASSERT_EQ(same->evidence, c.evidence);
    }
  }
}

// Generality and partonomy filtering.

TEST(FilterTest, Examples) {
  OntologyGraph g = OntologyGraph::FromTerms(
      {MakeTerm("T:a", "a", {"T:b"}), MakeTerm("T:b", "b"),
       MakeTerm("T:c", "c", {}, {"T:b"}), MakeTerm("T:d", "d")});
  auto single = FilterCandidates(g, {Candidate("T:a", "F")});
  EXPECT_EQ(single[0].status, CandidateStatus::kAutoRetained);
  EXPECT_FALSE(single[0].filter_reason);

  auto cs = FilterCandidates(g, {Candidate("T:a", "F"), Candidate("T:b", "F"),
                                 Candidate("T:c", "F"), Candidate("T:d", "F"),
                                 Candidate("T:a", "G")});
  EXPECT_EQ(cs[0].status, CandidateStatus::kAutoFiltered);
  EXPECT_EQ(cs[0].filter_reason,
            (FilterReason{FilterRule::kSubclassOfCandidate, Id("T:b")}));
  EXPECT_EQ(cs[1].status, CandidateStatus::kAutoRetained);
  EXPECT_EQ(cs[2].filter_reason,
            (FilterReason{FilterRule::kPartOfCandidate, Id("T:b")}));
  EXPECT_EQ(cs[3].status, CandidateStatus::kAutoRetained);
  // Only candidates of the same frame block.
  EXPECT_EQ(cs[4].status, CandidateStatus::kAutoRetained);

  auto global = FilterCandidates(g, {Candidate("T:a", "G")},
                                 {.scope = FilterScope::kGlobal});
  EXPECT_EQ(global[0].status, CandidateStatus::kAutoFiltered);
}

TEST(FilterTest, CuratedStatusesAreKept) {
  OntologyGraph g =
      OntologyGraph::FromTerms({MakeTerm("T:a", "a", {"T:b"}), MakeTerm("T:b", "b")});
  MappingCandidate a = Candidate("T:a", "F");
  a.status = CandidateStatus::kAccepted;
  MappingCandidate b = Candidate("T:b", "F");
  b.status = CandidateStatus::kDiscarded;
  auto cs = FilterCandidates(g, {a, b});
  EXPECT_EQ(cs[0], a);
  EXPECT_EQ(cs[1], b);
}

TEST(FilterTest, UnknownTermIsError) {
  OntologyGraph g = OntologyGraph::FromTerms({MakeTerm("T:a", "a")});
  EXPECT_THROW(FilterCandidates(g, {Candidate("T:zz", "F")}), Error);
}

struct RandomCase {
  testing::RawDag dag;
  OntologyGraph graph;
  std::vector<MappingCandidate> candidates;
  std::vector<int> nodes;  // candidate index -> dag node
};

RandomCase MakeRandomCase(std::mt19937 &rng) {
  RandomCase rc;
  rc.dag = testing::RandomDag(rng);
  rc.graph = testing::ToGraph(rc.dag);
  const char *frames[] = {"F1", "F2", "F3"};
  for (int n = 0; n < rc.dag.nodes; ++n) {
    for (const char *f : frames) {
      if (rng() % 3 == 0) {
        rc.candidates.push_back(Candidate(rc.dag.Name(n), f));
        rc.nodes.push_back(n);
      }
    }
  }
  return rc;
}

void CheckAgainstOracle(const RandomCase &rc, const FilterOptions &options) {
  std::vector<testing::OracleReach> reach;
  for (int n = 0; n < rc.dag.nodes; ++n) {
    reach.push_back(testing::ComputeReach(rc.dag, n));
  }
  auto filtered = FilterCandidates(rc.graph, rc.candidates, options);
  ASSERT_EQ(filtered.size(), rc.candidates.size());
  const bool pure = options.part_of_mode == PartOfMode::kPure;
  for (size_t i = 0; i < filtered.size(); ++i) {
    std::vector<int> pool;
    if (options.scope == FilterScope::kGlobal) {
      for (int n = 0; n < rc.dag.nodes; ++n) pool.push_back(n);
    } else {
      for (size_t j = 0; j < rc.candidates.size(); ++j) {
        if (rc.candidates[j].frame == rc.candidates[i].frame) {
          pool.push_back(rc.nodes[j]);
        }
      }
    }
    testing::OracleVerdict v =
        testing::OracleFilter(rc.dag, reach[rc.nodes[i]], rc.nodes[i], pool, pure);
    const MappingCandidate &c = filtered[i];
    ASSERT_EQ(c.status == CandidateStatus::kAutoFiltered, v.filtered)
        << c.term.str() << " " << c.frame;
    if (v.filtered) {
      ASSERT_EQ(c.filter_reason->rule, *v.rule);
      ASSERT_EQ(c.filter_reason->blocker.str(), v.blocker);
    } else {
      ASSERT_EQ(c.status, CandidateStatus::kAutoRetained);
      ASSERT_FALSE(c.filter_reason);
    }
    ASSERT_EQ(c.auto_status, c.status);
    ASSERT_EQ(c.auto_filter_reason, c.filter_reason);
  }
}

TEST(FilterProperty, AgreesWithBruteForceOracle) {
  std::mt19937 rng(424242);
  for (int round = 0; round < 200; ++round) {
    RandomCase rc = MakeRandomCase(rng);
    CheckAgainstOracle(rc, {});
    CheckAgainstOracle(rc, {.part_of_mode = PartOfMode::kPure});
    CheckAgainstOracle(rc, {.scope = FilterScope::kGlobal});
    if (HasFatalFailure()) return;
  }
}

TEST(FilterProperty, RetainedCandidatesAreSound) {
  std::mt19937 rng(99);
  for (int round = 0; round < 100; ++round) {
    RandomCase rc = MakeRandomCase(rng);
    auto filtered = FilterCandidates(rc.graph, rc.candidates);
    for (const MappingCandidate &c : filtered) {
      if (c.status != CandidateStatus::kAutoRetained) continue;
      for (const MappingCandidate &d : filtered) {
        if (d.frame != c.frame || d.term == c.term) continue;
        ASSERT_FALSE(rc.graph.IsSubclassOf(c.term, d.term));
        ASSERT_FALSE(rc.graph.IsPartOf(c.term, d.term));
      }
    }
  }
}

TEST(FilterProperty, OrderIndependent) {
  std::mt19937 rng(1234);
  for (int round = 0; round < 100; ++round) {
    RandomCase rc = MakeRandomCase(rng);
    auto key = [](const std::vector<MappingCandidate> &cs) {
      std::map<std::pair<std::string, std::string>, MappingCandidate> out;
      for (const MappingCandidate &c : cs) out.emplace(std::pair{c.term.str(), c.frame}, c);
      return out;
    };
    auto base = key(FilterCandidates(rc.graph, rc.candidates));
    std::vector<MappingCandidate> shuffled = rc.candidates;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    ASSERT_EQ(key(FilterCandidates(rc.graph, shuffled)), base);
  }
}

// Curation.

TEST(CurationTest, AcceptOverridesFilter) {
  MappingCandidate c = Candidate("T:a", "F");
  c.status = c.auto_status = CandidateStatus::kAutoFiltered;
  c.filter_reason = c.auto_filter_reason =
      FilterReason{FilterRule::kSubclassOfCandidate, Id("T:b")};
  auto cs = ApplyCuration({c}, {Decide("T:a", "F", Verdict::kAccept)},
                          CurationMode::kStrict);
  EXPECT_EQ(cs[0].status, CandidateStatus::kAccepted);
  EXPECT_FALSE(cs[0].filter_reason);
  EXPECT_EQ(cs[0].auto_status, CandidateStatus::kAutoFiltered);
  EXPECT_TRUE(cs[0].auto_filter_reason);
}

TEST(CurationTest, LastDecisionWins) {
  auto cs = ApplyCuration({Candidate("T:a", "F")},
                          {Decide("T:a", "F", Verdict::kDiscard),
                           Decide("T:a", "F", Verdict::kAccept)},
                          CurationMode::kStrict);
  EXPECT_EQ(cs[0].status, CandidateStatus::kAccepted);
}

TEST(CurationTest, EmptyLogAndUnknownKeys) {
  std::vector<MappingCandidate> cs = {Candidate("T:a", "F")};
  EXPECT_EQ(ApplyCuration(cs, {}, CurationMode::kStrict), cs);
  std::vector<CurationDecision> unknown = {Decide("T:zz", "F", Verdict::kAccept)};
  EXPECT_THROW(ApplyCuration(cs, unknown, CurationMode::kStrict), Error);
  std::vector<std::string> warnings;
  EXPECT_EQ(ApplyCuration(cs, unknown, CurationMode::kLenient, &warnings), cs);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(CurationProperty, Idempotent) {
  std::mt19937 rng(8);
  for (int round = 0; round < 100; ++round) {
    RandomCase rc = MakeRandomCase(rng);
    auto filtered = FilterCandidates(rc.graph, rc.candidates);
    if (filtered.empty()) continue;
    std::vector<CurationDecision> log;
    for (int i = 0; i < 10; ++i) {
      const MappingCandidate &c = filtered[rng() % filtered.size()];
      log.push_back(Decide(c.term.str(), c.frame,
                           rng() % 2 ? Verdict::kAccept : Verdict::kDiscard));
    }
    auto once = ApplyCuration(filtered, log, CurationMode::kStrict);
    ASSERT_EQ(ApplyCuration(once, log, CurationMode::kStrict), once);
  }
}

// Classification.

std::vector<MappingCandidate> Finals(
    const std::vector<std::tuple<std::string, std::string, std::string>> &rows) {
  std::vector<MappingCandidate> out;
  for (const auto &[term, frame, verb] : rows) {
    MappingCandidate c = Candidate(term, frame);
    c.evidence = {{"head", verb, MatchVia::kNominalization}};
    c.status = CandidateStatus::kAutoRetained;
    out.push_back(c);
  }
  return out;
}

TEST(ClassifyTest, Examples) {
  auto cs = Finals({{"GO:0018409", "Preventing", "block"},
                    {"GO:0018410", "Preventing", "block"},
                    {"GO:0060468", "Preventing", "prevent"},
                    {"GO:0008283", "Proliferation_in_number", "proliferate"},
                    {"GO:0048134", "Creating", "form"},
                    {"GO:0048646", "Creating", "form"}});
  MappingCandidate discarded = Candidate("GO:0000001", "Causation");
  discarded.status = CandidateStatus::kDiscarded;
  cs.push_back(discarded);
  MappingCandidate filtered = Candidate("GO:0000002", "Causation");
  filtered.status = CandidateStatus::kAutoFiltered;
  cs.push_back(filtered);

  MappingReport r = ClassifyMappings(
      cs, {"Preventing", "Proliferation_in_number", "Creating", "Causation"});
  EXPECT_EQ(r.frame_cases.at("Preventing").label, CaseLabel::kMultipleMultiVerb);
  EXPECT_EQ(r.frame_cases.at("Preventing").verbs,
            (std::vector<std::string>{"block", "prevent"}));
  EXPECT_EQ(r.frame_cases.at("Proliferation_in_number").label,
            CaseLabel::kSingleMapping);
  EXPECT_EQ(r.frame_cases.at("Creating").label, CaseLabel::kMultipleMultiSpecific);
  EXPECT_EQ(r.frame_cases.at("Causation").label, CaseLabel::kNoMapping);
  EXPECT_TRUE(r.frame_cases.at("Causation").terms.empty());
  EXPECT_EQ(r.final_mappings.size(), 6u);
  EXPECT_TRUE(r.multi_frame_terms.empty());
}

TEST(ClassifyTest, MultiFrameTerms) {
  auto cs = Finals({{"GO:0019882", "Process", "process"},
                    {"GO:0019882", "Cause_to_perceive", "present"}});
  MappingReport r = ClassifyMappings(cs, {"Process", "Cause_to_perceive"});
  ASSERT_EQ(r.multi_frame_terms.size(), 1u);
  EXPECT_EQ(r.multi_frame_terms.at(Id("GO:0019882")),
            (std::vector<std::string>{"Cause_to_perceive", "Process"}));
}

TEST(WireNamesTest, RoundTrip) {
  for (auto s : {CandidateStatus::kCandidate, CandidateStatus::kAutoRetained,
                 CandidateStatus::kAutoFiltered, CandidateStatus::kAccepted,
                 CandidateStatus::kDiscarded}) {
    EXPECT_EQ(ParseCandidateStatus(ToString(s)), s);
  }
  for (auto l : {CaseLabel::kNoMapping, CaseLabel::kSingleMapping,
                 CaseLabel::kMultipleMultiVerb, CaseLabel::kMultipleMultiSpecific}) {
    EXPECT_EQ(ParseCaseLabel(ToString(l)), l);
  }
  EXPECT_EQ(ToString(FilterRule::kPartOfCandidate), "part_of_candidate");
  EXPECT_THROW(ParseVerdict("maybe"), Error);
}

}  // namespace
}  // namespace framealign

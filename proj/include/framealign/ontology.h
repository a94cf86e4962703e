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

// OBO ontology loading and transitive is_a / part_of queries.
//
// The graph is immutable once built. Obsolete terms are kept so that their
// ids resolve, but they take no part in closure computations: they never
// appear in an ancestor set and their own ancestor set is empty.

#ifndef FRAMEALIGN_ONTOLOGY_H_
#define FRAMEALIGN_ONTOLOGY_H_

#include <compare>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace framealign {

// Ontology term identifier of the form PREFIX:LOCALID. GO identifiers must
// have exactly seven digits after the prefix.
class TermId {
 public:
  // Throws InputError on malformed ids.
  static TermId Parse(std::string_view text);
  static bool IsValid(std::string_view text);

  const std::string &str() const { return value_; }

  auto operator<=>(const TermId &other) const = default;
  bool operator==(const TermId &other) const = default;

 private:
  explicit TermId(std::string value) : value_(std::move(value)) {}

  std::string value_;
};

struct Term {
  TermId id;
  std::string name;
  std::string name_space;
  std::vector<TermId> is_a_parents;
  std::vector<TermId> part_of_parents;
  std::vector<std::string> synonyms;
  bool obsolete = false;

  bool operator==(const Term &other) const = default;
};

// Edge types followed by a closure query.
struct Relations {
  bool is_a = false;
  bool part_of = false;

  static constexpr Relations IsA() { return {true, false}; }
  static constexpr Relations PartOf() { return {false, true}; }
  static constexpr Relations Both() { return {true, true}; }
};

enum class ParseMode { kStrict, kLenient };

// kMixed: a part_of path may also traverse is_a edges, as long as it uses at
// least one part_of edge. kPure: only part_of edges are followed.
enum class PartOfMode { kMixed, kPure };

class OntologyGraph {
 public:
  OntologyGraph() = default;

  // Validates and indexes the terms. Duplicate ids and cycles throw
  // InvariantError. Dangling parents of live terms throw InputError in
  // strict mode; in lenient mode the edge is dropped with a warning.
  // Self-parents are reported as cycles.
  static OntologyGraph FromTerms(std::vector<Term> terms,
                                 ParseMode mode = ParseMode::kStrict);

  const std::vector<Term> &terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Returns nullptr for unknown ids.
  const Term *Find(const TermId &id) const;
  // Throws InputError for unknown ids.
  const Term &Get(const TermId &id) const;

  size_t is_a_edge_count() const { return is_a_edges_; }
  size_t part_of_edge_count() const { return part_of_edges_; }

  // Non-fatal problems found while building (lenient mode only).
  const std::vector<std::string> &warnings() const { return warnings_; }

  // Terms reachable from id through one or more edges of the given types,
  // sorted by id. The id itself is never included.
  std::vector<TermId> Ancestors(const TermId &id, Relations relations) const;

  // Terms b with IsPartOf(id, b), sorted by id.
  std::vector<TermId> PartOfAncestors(const TermId &id,
                                      PartOfMode mode = PartOfMode::kMixed) const;

  bool IsSubclassOf(const TermId &a, const TermId &b) const;
  bool IsPartOf(const TermId &a, const TermId &b,
                PartOfMode mode = PartOfMode::kMixed) const;

  // Equality over the modeled term data, in load order.
  bool operator==(const OntologyGraph &other) const {
    return terms_ == other.terms_;
  }

 private:
  friend class OboParser;

  static OntologyGraph Build(std::vector<Term> terms,
                             const std::vector<int> &lines, ParseMode mode);
  int IndexOf(const TermId &id) const;
  std::vector<int> Reach(int start, Relations relations) const;
  std::vector<int> PartOfReach(int start, PartOfMode mode) const;
  std::vector<TermId> ToIds(std::vector<int> indices) const;

  std::vector<Term> terms_;
  std::unordered_map<std::string, int> index_;
  // Closure adjacency: parent indices, restricted to live terms.
  std::vector<std::vector<int>> is_a_up_;
  std::vector<std::vector<int>> part_of_up_;
  size_t is_a_edges_ = 0;
  size_t part_of_edges_ = 0;
  std::vector<std::string> warnings_;
};

// Parses OBO 1.2 text. Only [Term] stanzas are modeled; the tags id, name,
// namespace, is_a, relationship: part_of, synonym and is_obsolete are read
// and everything else is skipped. Errors carry 1-based line numbers.
OntologyGraph ParseObo(std::string_view text,
                       ParseMode mode = ParseMode::kStrict);
OntologyGraph ParseObo(std::istream &in, ParseMode mode = ParseMode::kStrict);
OntologyGraph LoadObo(const std::filesystem::path &path,
                      ParseMode mode = ParseMode::kStrict);

// Serializes the modeled subset of the graph back to OBO 1.2.
std::string WriteObo(const OntologyGraph &graph);

}  // namespace framealign

template <>
struct std::hash<framealign::TermId> {
  size_t operator()(const framealign::TermId &id) const noexcept {
    return std::hash<std::string>()(id.str());
  }
};

#endif  // FRAMEALIGN_ONTOLOGY_H_

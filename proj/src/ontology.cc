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

#include "framealign/ontology.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "framealign/error.h"
#include "framealign/util.h"

namespace framealign {

bool TermId::IsValid(std::string_view text) {
  size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 ||
      colon + 1 == text.size() ||
      text.find(':', colon + 1) != std::string_view::npos) {
    return false;
  }
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  }
  if (text.substr(0, colon) == "GO") {
    std::string_view local = text.substr(colon + 1);
    if (local.size() != 7) return false;
    for (char c : local) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
  }
  return true;
}

TermId TermId::Parse(std::string_view text) {
  if (!IsValid(text)) {
    throw InputError("malformed term id '" + std::string(text) + "'");
  }
  return TermId(std::string(text));
}

OntologyGraph OntologyGraph::FromTerms(std::vector<Term> terms,
                                       ParseMode mode) {
  return Build(std::move(terms), {}, mode);
}

OntologyGraph OntologyGraph::Build(std::vector<Term> terms,
                                   const std::vector<int> &lines,
                                   ParseMode mode) {
  auto where = [&](size_t i) {
    return i < lines.size() ? " (stanza at line " + std::to_string(lines[i]) + ")"
                            : std::string();
  };

  OntologyGraph graph;
  graph.terms_ = std::move(terms);
  const int n = static_cast<int>(graph.terms_.size());
  for (int i = 0; i < n; ++i) {
    const Term &t = graph.terms_[i];
    if (!graph.index_.emplace(t.id.str(), i).second) {
      throw InvariantError("duplicate term " + t.id.str() + where(i));
    }
    if (t.name.empty() && !t.obsolete) {
      throw InputError("term " + t.id.str() + " has no name" + where(i));
    }
  }

  graph.is_a_up_.assign(n, {});
  graph.part_of_up_.assign(n, {});
  // Combined adjacency over every resolved edge, used for cycle detection.
  std::vector<std::vector<int>> all_up(n);

  auto resolve = [&](int child, std::vector<TermId> &parents,
                     std::vector<std::vector<int>> &up, size_t &edges,
                     const char *relation) {
    Term &t = graph.terms_[child];
    std::vector<TermId> kept;
    for (const TermId &p : parents) {
      if (p == t.id) {
        throw InvariantError("cycle detected: " + t.id.str() + " -> " +
                             t.id.str() + " (" + relation + ")" + where(child));
      }
      int parent = graph.IndexOf(p);
      if (parent < 0) {
        if (t.obsolete) {
          // Obsolete terms are exempt from resolution.
          kept.push_back(p);
          continue;
        }
        std::string msg = "dangling " + std::string(relation) + " parent " +
                           p.str() + " of " + t.id.str() + where(child);
        if (mode == ParseMode::kStrict) throw InputError(msg);
        graph.warnings_.push_back(msg + "; edge dropped");
        continue;
      }
      kept.push_back(p);
      ++edges;
      all_up[child].push_back(parent);
      if (!t.obsolete && !graph.terms_[parent].obsolete) {
        up[child].push_back(parent);
      }
    }
    parents = std::move(kept);
  };
  for (int i = 0; i < n; ++i) {
    resolve(i, graph.terms_[i].is_a_parents, graph.is_a_up_, graph.is_a_edges_,
            "is_a");
    resolve(i, graph.terms_[i].part_of_parents, graph.part_of_up_,
            graph.part_of_edges_, "part_of");
  }

  // Iterative three-colour DFS; on a back edge the cycle is read off the
  // explicit stack.
  enum Colour : char { kWhite, kGrey, kBlack };
  std::vector<Colour> colour(n, kWhite);
  for (int root = 0; root < n; ++root) {
    if (colour[root] != kWhite) continue;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    colour[root] = kGrey;
    while (!stack.empty()) {
      auto &[node, next] = stack.back();
      if (next < all_up[node].size()) {
        int parent = all_up[node][next++];
        if (colour[parent] == kGrey) {
          std::string path;
          bool on_cycle = false;
          for (const auto &frame : stack) {
            if (frame.first == parent) on_cycle = true;
            if (on_cycle) path += graph.terms_[frame.first].id.str() + " -> ";
          }
          path += graph.terms_[parent].id.str();
          throw InvariantError("cycle detected: " + path);
        }
        if (colour[parent] == kWhite) {
          colour[parent] = kGrey;
          stack.emplace_back(parent, 0);
        }
      } else {
        colour[node] = kBlack;
        stack.pop_back();
      }
    }
  }
  return graph;
}

int OntologyGraph::IndexOf(const TermId &id) const {
  auto it = index_.find(id.str());
  return it == index_.end() ? -1 : it->second;
}

const Term *OntologyGraph::Find(const TermId &id) const {
  int i = IndexOf(id);
  return i < 0 ? nullptr : &terms_[i];
}

const Term &OntologyGraph::Get(const TermId &id) const {
  int i = IndexOf(id);
  if (i < 0) throw InputError("unknown term " + id.str());
  return terms_[i];
}

std::vector<int> OntologyGraph::Reach(int start, Relations relations) const {
  std::vector<char> seen(terms_.size(), 0);
  std::vector<int> out;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    auto visit = [&](const std::vector<int> &parents) {
      for (int p : parents) {
        if (!seen[p]) {
          seen[p] = 1;
          out.push_back(p);
          queue.push_back(p);
        }
      }
    };
    if (relations.is_a) visit(is_a_up_[node]);
    if (relations.part_of) visit(part_of_up_[node]);
  }
  // Acyclicity guarantees start is never revisited.
  return out;
}

std::vector<int> OntologyGraph::PartOfReach(int start, PartOfMode mode) const {
  if (mode == PartOfMode::kPure) return Reach(start, Relations::PartOf());

  // Search over (term, used_part_of) states.
  const size_t n = terms_.size();
  std::vector<char> seen(2 * n, 0);
  std::deque<std::pair<int, bool>> queue{{start, false}};
  std::vector<int> out;
  auto push = [&](int node, bool flag) {
    size_t key = 2 * node + (flag ? 1 : 0);
    if (seen[key]) return;
    seen[key] = 1;
    if (flag) out.push_back(node);
    queue.emplace_back(node, flag);
  };
  while (!queue.empty()) {
    auto [node, flag] = queue.front();
    queue.pop_front();
    for (int p : is_a_up_[node]) push(p, flag);
    for (int p : part_of_up_[node]) push(p, true);
  }
  return out;
}

std::vector<TermId> OntologyGraph::ToIds(std::vector<int> indices) const {
  std::vector<TermId> ids;
  ids.reserve(indices.size());
  for (int i : indices) ids.push_back(terms_[i].id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<TermId> OntologyGraph::Ancestors(const TermId &id,
                                             Relations relations) const {
  const Term &t = Get(id);
  if (t.obsolete) return {};
  return ToIds(Reach(IndexOf(id), relations));
}

std::vector<TermId> OntologyGraph::PartOfAncestors(const TermId &id,
                                                   PartOfMode mode) const {
  const Term &t = Get(id);
  if (t.obsolete) return {};
  return ToIds(PartOfReach(IndexOf(id), mode));
}

bool OntologyGraph::IsSubclassOf(const TermId &a, const TermId &b) const {
  Get(b);
  auto ancestors = Ancestors(a, Relations::IsA());
  return std::binary_search(ancestors.begin(), ancestors.end(), b);
}

bool OntologyGraph::IsPartOf(const TermId &a, const TermId &b,
                             PartOfMode mode) const {
  Get(b);
  auto ancestors = PartOfAncestors(a, mode);
  return std::binary_search(ancestors.begin(), ancestors.end(), b);
}

// Line-oriented OBO reader.
class OboParser {
 public:
  explicit OboParser(ParseMode mode) : mode_(mode) {}

  OntologyGraph Parse(std::string_view text) {
    size_t bad = FindInvalidUtf8(text);
    if (bad != std::string_view::npos) {
      int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + bad, '\n'));
      throw InputError("line " + std::to_string(line) +
                       ": input is not valid UTF-8");
    }
    size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      HandleLine(text.substr(pos, end - pos), line_no);
      if (end == text.size()) break;
      pos = end + 1;
    }
    FinishStanza();
    return OntologyGraph::Build(std::move(terms_), lines_, mode_);
  }

 private:
  [[noreturn]] void Fail(int line, const std::string &message) const {
    throw InputError("line " + std::to_string(line) + ": " + message);
  }

  static std::string_view StripComment(std::string_view value) {
    size_t bang = value.find('!');
    if (bang != std::string_view::npos) value = value.substr(0, bang);
    size_t brace = value.find('{');
    if (brace != std::string_view::npos) value = value.substr(0, brace);
    return Trim(value);
  }

  TermId ParseId(std::string_view value, int line) const {
    if (!TermId::IsValid(value)) {
      Fail(line, "malformed term id '" + std::string(value) + "'");
    }
    return TermId::Parse(value);
  }

  void HandleLine(std::string_view raw, int line) {
    std::string_view text = Trim(raw);
    if (text.empty() || text.front() == '!') return;
    if (text.front() == '[') {
      FinishStanza();
      in_term_ = text == "[Term]";
      if (in_term_) {
        stanza_line_ = line;
        id_.reset();
        current_ = Fresh();
      }
      return;
    }
    if (!in_term_) return;

    size_t colon = text.find(':');
    if (colon == std::string_view::npos) Fail(line, "malformed tag line");
    std::string_view tag = Trim(text.substr(0, colon));
    std::string_view value = Trim(text.substr(colon + 1));

    if (tag == "id") {
      if (id_) Fail(line, "duplicate id tag in stanza");
      id_ = ParseId(StripComment(value), line);
    } else if (tag == "name") {
      current_.name = std::string(value);
    } else if (tag == "namespace") {
      current_.name_space = std::string(value);
    } else if (tag == "is_a") {
      current_.is_a_parents.push_back(ParseId(StripComment(value), line));
    } else if (tag == "relationship") {
      auto fields = SplitWhitespace(StripComment(value));
      if (fields.size() < 2) Fail(line, "malformed relationship");
      if (fields[0] == "part_of") {
        current_.part_of_parents.push_back(ParseId(fields[1], line));
      }
    } else if (tag == "synonym") {
      current_.synonyms.push_back(ParseQuoted(value, line));
    } else if (tag == "is_obsolete") {
      current_.obsolete = StripComment(value) == "true";
    }
  }

  std::string ParseQuoted(std::string_view value, int line) const {
    if (value.empty() || value.front() != '"') Fail(line, "synonym is not quoted");
    std::string out;
    for (size_t i = 1; i < value.size(); ++i) {
      char c = value[i];
      if (c == '\\' && i + 1 < value.size()) {
        out.push_back(value[++i]);
      } else if (c == '"') {
        return out;
      } else {
        out.push_back(c);
      }
    }
    Fail(line, "unterminated synonym string");
  }

  void FinishStanza() {
    if (!in_term_) return;
    in_term_ = false;
    if (!id_) Fail(stanza_line_, "[Term] stanza without id");
    Term term{*id_,
              std::move(current_.name),
              std::move(current_.name_space),
              std::move(current_.is_a_parents),
              std::move(current_.part_of_parents),
              std::move(current_.synonyms),
              current_.obsolete};
    terms_.push_back(std::move(term));
    lines_.push_back(stanza_line_);
    id_.reset();
  }

  struct Pending {
    std::string name;
    std::string name_space;
    std::vector<TermId> is_a_parents;
    std::vector<TermId> part_of_parents;
    std::vector<std::string> synonyms;
    bool obsolete = false;
  };
  static Pending Fresh() { return {}; }

  ParseMode mode_;
  bool in_term_ = false;
  int stanza_line_ = 0;
  std::optional<TermId> id_;
  Pending current_;
  std::vector<Term> terms_;
  std::vector<int> lines_;
};

OntologyGraph ParseObo(std::string_view text, ParseMode mode) {
  return OboParser(mode).Parse(text);
}

OntologyGraph ParseObo(std::istream &in, ParseMode mode) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseObo(std::string_view(buffer.str()), mode);
}

OntologyGraph LoadObo(const std::filesystem::path &path, ParseMode mode) {
  return ParseObo(std::string_view(ReadFile(path)), mode);
}

std::string WriteObo(const OntologyGraph &graph) {
  std::ostringstream out;
  out << "format-version: 1.2\n";
  for (const Term &t : graph.terms()) {
    out << "\n[Term]\n";
    out << "id: " << t.id.str() << "\n";
    if (!t.name.empty()) out << "name: " << t.name << "\n";
    if (!t.name_space.empty()) out << "namespace: " << t.name_space << "\n";
    for (const std::string &s : t.synonyms) {
      out << "synonym: \"";
      for (char c : s) {
        if (c == '"' || c == '\\') out << '\\';
        out << c;
      }
      out << "\" EXACT []\n";
    }
    for (const TermId &p : t.is_a_parents) out << "is_a: " << p.str() << "\n";
    for (const TermId &p : t.part_of_parents) {
      out << "relationship: part_of " << p.str() << "\n";
    }
    if (t.obsolete) out << "is_obsolete: true\n";
  }
  return out.str();
}

}  // namespace framealign

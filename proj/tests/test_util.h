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

#ifndef FRAMEALIGN_TESTS_TEST_UTIL_H_
#define FRAMEALIGN_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "framealign/ontology.h"
#include "framealign/pipeline.h"

namespace framealign::testing {

inline std::filesystem::path DataDir() { return FRAMEALIGN_DATA_DIR; }
inline std::filesystem::path TestDataDir() { return FRAMEALIGN_TEST_DATA_DIR; }
inline std::filesystem::path FixtureDir() {
  return DataDir() / "fixtures" / "worked_example";
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("framealign-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline Term MakeTerm(const std::string &id, const std::string &name,
                     std::vector<std::string> is_a = {},
                     std::vector<std::string> part_of = {},
                     const std::string &name_space = "biological_process") {
  Term t{TermId::Parse(id), name, name_space, {}, {}, {}, false};
  for (const std::string &p : is_a) t.is_a_parents.push_back(TermId::Parse(p));
  for (const std::string &p : part_of) {
    t.part_of_parents.push_back(TermId::Parse(p));
  }
  return t;
}

inline PipelineConfig FixtureConfig() {
  PipelineConfig c;
  c.obo = FixtureDir() / "ontology.obo";
  c.frames = FixtureDir() / "frames.json";
  c.verbs = FixtureDir() / "verbs.txt";
  c.lexicon = DataDir() / "derivation_lexicon.json";
  c.overrides = FixtureDir() / "overrides.json";
  c.decisions = FixtureDir() / "decisions.jsonl";
  return c;
}

inline std::vector<std::string> Ids(const std::vector<TermId> &ids) {
  std::vector<std::string> out;
  for (const TermId &id : ids) out.push_back(id.str());
  return out;
}

}  // namespace framealign::testing

#endif  // FRAMEALIGN_TESTS_TEST_UTIL_H_

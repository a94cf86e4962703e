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

#ifndef FRAMEALIGN_CLI_H_
#define FRAMEALIGN_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace framealign {

// frame-align parse|assign|map|report|serve|export-decisions.
// Returns the process exit code: 0 success, 1 input error, 2 invariant
// violation.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace framealign

#endif  // FRAMEALIGN_CLI_H_

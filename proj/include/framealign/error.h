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

#ifndef FRAMEALIGN_ERROR_H_
#define FRAMEALIGN_ERROR_H_

#include <stdexcept>
#include <string>

namespace framealign {

// Error categories. The numeric values double as process exit codes.
enum class ErrorKind {
  kInput = 1,      // unreadable file, syntax error, unknown reference
  kInvariant = 2,  // cycle, duplicate definition
};

// All library failures are reported by throwing an Error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

inline Error InputError(const std::string &message) {
  return Error(ErrorKind::kInput, message);
}

inline Error InvariantError(const std::string &message) {
  return Error(ErrorKind::kInvariant, message);
}

}  // namespace framealign

#endif  // FRAMEALIGN_ERROR_H_

// Copyright 2026 The grasskit Authors
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

#ifndef GRASSKIT_ERRORS_HPP
#define GRASSKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grasskit {

/// Status codes shared by the C++ exceptions, the C API and the CLI exit
/// codes. The numeric values are part of the CLI contract.
enum class Status : int {
  Ok = 0,
  Internal = 1,
  ParseError = 2,            // malformed file / JSON
  InvalidObject = 3,         // a value violating its own invariants
  Precondition = 4,          // infeasible request / contract violation
  ClassificationFailure = 5, // recovery or structure test failed
  TableMiss = 6,             // oracle table does not cover a query
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}

  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void throw_parse(const std::string& msg) {
  throw Error(Status::ParseError, msg);
}
[[noreturn]] inline void throw_invalid(const std::string& msg) {
  throw Error(Status::InvalidObject, msg);
}
[[noreturn]] inline void throw_precondition(const std::string& msg) {
  throw Error(Status::Precondition, msg);
}
[[noreturn]] inline void throw_classification(const std::string& msg) {
  throw Error(Status::ClassificationFailure, msg);
}

}  // namespace grasskit

#endif  // GRASSKIT_ERRORS_HPP

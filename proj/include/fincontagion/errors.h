// Copyright 2026 The fincontagion Authors
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

#ifndef FINCONTAGION_ERRORS_H_
#define FINCONTAGION_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace fincontagion {

// One violated network invariant. `subject` names the offending node, edge
// or parameter.
struct Violation {
  std::string subject;
  std::string message;
};

std::string FormatViolations(const std::vector<Violation>& violations);

// A network failed validation.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : std::runtime_error(FormatViolations(violations)),
        violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// A node identifier that does not exist in the network.
class UnknownNodeError : public std::runtime_error {
 public:
  explicit UnknownNodeError(const std::string& id)
      : std::runtime_error("unknown node '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// A solver was asked to run outside its preconditions.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A reduction generator rejected its source object or failed to verify the
// parameter inequalities its construction relies on.
class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fincontagion

#endif  // FINCONTAGION_ERRORS_H_

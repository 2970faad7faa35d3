// Copyright 2026 inertia-eval contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INERTIA_ERRORS_HPP_
#define INERTIA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace inertia {

// Malformed or inconsistent input data: mismatched corpus sizes, parse
// failures, undefined metric cases. The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameter values supplied by the caller. Exit code 1 in the CLI.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace inertia

#endif  // INERTIA_ERRORS_HPP_

// Copyright 2026 The ddeg Authors
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

#ifndef DDEG_ERROR_HPP_
#define DDEG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddeg {

// Input or hypothesis violation. The CLI maps it to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact oracle refused an input above its configured size guard.
class SizeLimitError : public PreconditionError {
 public:
  SizeLimitError(const std::string& what, std::size_t limit)
      : PreconditionError(what + " (limit " + std::to_string(limit) + ")"),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

// A construction could not certify its output. The CLI maps it to exit
// code 3.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ddeg

#endif  // DDEG_ERROR_HPP_

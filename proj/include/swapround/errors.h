// Copyright 2026 The Authors.
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

#ifndef SWAPROUND_ERRORS_H_
#define SWAPROUND_ERRORS_H_

#include <stdexcept>
#include <string>

namespace swapround {

// Raised when a caller violates an operation's precondition (out-of-range
// element, malformed set, parameter outside its domain).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an oracle or instance cannot support the requested operation,
// e.g. a rank query against an independence-only oracle or an exact
// enumeration over too large a ground set.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace swapround

#endif  // SWAPROUND_ERRORS_H_

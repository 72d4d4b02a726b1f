// Copyright 2026 The liarq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIARQ_ERRORS_HPP
#define LIARQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liarq {

// Precondition violated by the caller (bad index, odd qubit count, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured capacity.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A party attempted an action it is not entitled to, e.g. sending a qubit it
// does not hold. Distinct from qubit loss, which is a modeled fault.
class ProtocolViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invalid run configuration (unknown key, malformed value, bad arithmetic).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace liarq

#endif  // LIARQ_ERRORS_HPP

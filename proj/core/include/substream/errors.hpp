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

#ifndef SUBSTREAM_ERRORS_HPP_
#define SUBSTREAM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace substream {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A value-oracle query mentioned an element id outside the ground set.
// Fatal for the run: a streaming algorithm must never probe ids it has
// not legitimately received.
class GuardViolation : public Error {
 public:
  explicit GuardViolation(const std::string& what) : Error(what) {}
};

// Internal consistency breach (a policy returned an illegal augmenting
// pair, an independent set stopped being independent, ...). Indicates a
// programming bug, not bad input.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what) : Error(what) {}
};

// An operation was called on an object that does not support it, e.g. a
// vertex-conflict query on a matroid instance.
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what) : Error(what) {}
};

// Bad user-supplied parameter (nonpositive gamma, epsilon too large for
// the arity, dependent prime set, ...).
class ParamError : public Error {
 public:
  explicit ParamError(const std::string& what) : Error(what) {}
};

// Malformed instance file. Message carries "file:line:" when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Input too large for an exhaustive routine.
class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what) : Error(what) {}
};

}  // namespace substream

#endif  // SUBSTREAM_ERRORS_HPP_

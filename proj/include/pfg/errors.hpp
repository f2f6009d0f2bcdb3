// Copyright 2026 The pfg Authors
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

#ifndef PFG_ERRORS_HPP
#define PFG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of an operation: a player that is not
// in the game, a target that is not an embedded coalition of the game, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// A player set exceeds the configured universe cap, or an operation needs
// more (or fewer) players than it was given.
class SizeError : public Error {
 public:
  using Error::Error;
};

// A game definition lacks the worth of some embedded coalition.
class CompletenessError : public Error {
 public:
  using Error::Error;
};

// A tabulated solution concept was asked for a game it does not cover.
class CoverageError : public Error {
 public:
  using Error::Error;
};

// Malformed game text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A state that the algorithms guarantee cannot happen.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pfg

#endif  // PFG_ERRORS_HPP

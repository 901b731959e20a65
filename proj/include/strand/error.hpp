// Copyright 2026 The strand authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace strand {

/** Base class for all errors raised by the engine. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/** A name (type, generator, word, ...) is not registered. */
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

/** Wire types disagree where they must match. */
class TypeMismatchError : public Error {
 public:
  using Error::Error;
};

/** Malformed textual or JSON input. Position is 1-based; 0 when unknown. */
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message), line_(line), column_(column) {}
  explicit ParseError(const std::string& message) : ParseError(message, 0, 0) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/** A rewrite match is applied to a diagram it no longer fits. */
class StaleMatchError : public Error {
 public:
  using Error::Error;
};

/** Invariant violation inside the engine itself. */
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace strand

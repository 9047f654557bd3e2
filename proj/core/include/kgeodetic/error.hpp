// Copyright 2026 The kgeodetic Authors
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

#ifndef KGEODETIC_ERROR_HPP_
#define KGEODETIC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace kgeodetic {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed text input (graph files, group specs, words).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  explicit ParseError(const std::string& what) : ParseError(what, 0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Two vertices lie in different connected components.
class Unreachable : public Error {
 public:
  using Error::Error;
};

// Ball construction grew past its vertex budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A saturating geodesic count hit its cap.
class CountSaturated : public Error {
 public:
  using Error::Error;
};

// A question cannot be decided from the finite ball at hand.
class OutsideBall : public Error {
 public:
  using Error::Error;
};

}  // namespace kgeodetic

#endif  // KGEODETIC_ERROR_HPP_

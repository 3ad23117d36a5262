// Copyright 2026 The posetbounds Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posetbounds {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input relation contains a directed cycle.
class CycleError : public Error {
 public:
  using Error::Error;
};

/// An element index is out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Two posets (or a poset and a point) disagree on the ground-set size.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed expression or poset file. `position` is a 0-based character
/// offset for expressions and a 1-based line number for files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ValueError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (element count, extension count, matrix size) was hit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class NotConsistent : public Error {
 public:
  using Error::Error;
};

class NotInChainPolytope : public Error {
 public:
  using Error::Error;
};

class NotAnExtension : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// The exact series-parallel recurrences have no rule for N(k) blocks.
class UnsupportedNBlock : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace posetbounds

// Copyright 2026 The skirt Authors
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

namespace skirt {

// Base class of every error raised by the library. The CLI maps the derived
// types onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two words (or a word and a set) disagree on length or alphabet.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A precondition on construction parameters does not hold.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A configured universe, enumeration or work cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// The bounds ledger would hold lower > upper for some (n, q).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// Malformed input files, failed writes, corrupted assets.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace skirt

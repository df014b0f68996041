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

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "skirt/arrays.h"
#include "skirt/word.h"

namespace skirt {

// Tuple-set text format:
//   # comment lines
//   set n=<n> q=<q>
//   <n whitespace-separated symbols per line>
// With one_based, every symbol is read as s-1. Duplicate words are dropped
// and counted.
struct ParsedSet {
  TupleSet set;
  int offset = 0;
  std::size_t duplicates = 0;
};

ParsedSet read_tuple_set(std::istream& in, bool one_based = false);
void write_tuple_set(const TupleSet& set, std::ostream& out, int offset = 0);

// Array text format:
//   # comment lines
//   array N=<N> n=<n> q=<q> [t=<t>]
//   <N rows of n symbols>
// A t= entry is a claim only; certification happens in the verifiers.
struct ParsedArray {
  SkirtArray array;
  int offset = 0;
  std::optional<int> claimed_strength;
};

ParsedArray read_array(std::istream& in, bool one_based = false);
void write_array(const SkirtArray& array, std::ostream& out, int offset = 0,
                 std::optional<int> strength = std::nullopt);

ParsedSet read_tuple_set_file(const std::string& path, bool one_based = false);
ParsedArray read_array_file(const std::string& path, bool one_based = false);

}  // namespace skirt

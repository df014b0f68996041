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

#include <cstdint>
#include <optional>
#include <vector>

#include "skirt/bounds.h"
#include "skirt/limits.h"
#include "skirt/word.h"

namespace skirt {

struct StrengthVerdict {
  bool holds = false;
  // First failure: column subset (ascending, colex order over subsets) and
  // the t-tuple (lexicographic order) that no row handles.
  std::vector<int> failing_columns;
  std::optional<Word> failing_tuple;
};

class SkirtArray;

// Skirting-array check: for every t-subset T of columns and every y in
// Z_q^t some row x has d(x_T, y) = t. Certifies strength t on success.
StrengthVerdict verify_array_strength(
    SkirtArray& array, int t, const Limits& limits = Limits::FromEnvironment());

// Covering-array check: every t-subset of columns shows every t-tuple.
// Certifies covering strength t on success.
StrengthVerdict verify_covering_array(
    SkirtArray& array, int t, const Limits& limits = Limits::FromEnvironment());

// An N x n array over Z_q. Strength certificates are only ever set by the
// verifiers above and hold the largest t that passed; strength t implies
// every smaller strength.
class SkirtArray {
 public:
  SkirtArray(int n, int q, std::vector<Word> rows);

  int n() const { return n_; }
  int q() const { return q_; }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<Word>& rows() const { return rows_; }
  Symbol at(std::size_t row, int column) const { return rows_[row][column]; }

  std::optional<int> certified_strength() const { return certified_strength_; }
  std::optional<int> certified_covering_strength() const {
    return certified_covering_strength_;
  }

 private:
  friend StrengthVerdict verify_array_strength(SkirtArray&, int, const Limits&);
  friend StrengthVerdict verify_covering_array(SkirtArray&, int, const Limits&);

  int n_;
  int q_;
  std::vector<Word> rows_;
  std::optional<int> certified_strength_;
  std::optional<int> certified_covering_strength_;
};

// Drops the first (q-1)^t - 1 rows of a certified covering array of strength
// t; the result is re-verified and certified as a skirting array.
SkirtArray ca_to_sa(const SkirtArray& covering_array);

// Number of (T, y) pairs, over all t-subsets T and y in Z_q^t, that no row
// of `array` skirts. Zero iff the array has skirting strength t.
std::uint64_t skirting_deficiency(const SkirtArray& array, int t);

// f(n, q_target) <= q_target - v + N for a certified SA(N; t, n, v) with
// t = n + v - q_target. The record carries the explicit set (and
// kVerifiedWitness) when q_target^n is small enough to verify, otherwise it
// is kDerived.
BoundRecord derive_f_bound(const SkirtArray& array, int t, int q_target,
                           const Limits& limits = Limits::FromEnvironment());

struct LocalSearchOptions {
  int t = 2;
  int n = 3;
  int q = 2;
  int rows = 4;
  std::uint64_t seed = 1;
  std::uint64_t iterations = 100'000;
  // Steps without a new best deficiency before a random restart.
  std::uint64_t plateau = 20'000;
  Limits limits = Limits::FromEnvironment();
};

// Seeded local search over N x n arrays minimizing the skirting deficiency.
// Moves change one cell, picked from the cells blocking a random uncovered
// pair. Returns a certified array on reaching zero deficiency.
std::optional<SkirtArray> local_search_sa(const LocalSearchOptions& options);

}  // namespace skirt

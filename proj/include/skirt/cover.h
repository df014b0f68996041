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

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "skirt/limits.h"
#include "skirt/word.h"

namespace skirt {

// Minimum skirting set as set cover: candidates and universe are both
// Z_q^n (by rank) and candidate x covers the (q-1)^n words it skirts.
class CoverInstance {
 public:
  int n() const { return n_; }
  int q() const { return q_; }
  std::uint64_t universe_size() const { return universe_size_; }
  // (q-1)^n, the number of elements every candidate covers.
  std::uint64_t degree() const { return degree_; }

  // Ranks covered by candidate c, ascending. Skirting is symmetric, so this
  // is also the list of candidates covering element c.
  std::span<const std::uint32_t> covers(Rank c) const {
    return {coverage_.data() + c * degree_, degree_};
  }

 private:
  friend CoverInstance build_cover_instance(int n, int q, const Limits& limits);

  int n_ = 0;
  int q_ = 0;
  std::uint64_t universe_size_ = 0;
  std::uint64_t degree_ = 0;
  std::vector<std::uint32_t> coverage_;
};

CoverInstance build_cover_instance(
    int n, int q, const Limits& limits = Limits::FromEnvironment());

enum class SolveStatus { kOptimal, kFeasible, kBudgetExhausted };

std::string to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::kFeasible;
  TupleSet best_set;
  std::uint64_t proven_lower = 0;
  std::uint64_t nodes = 0;
  std::chrono::duration<double> elapsed{0};
  std::uint64_t seed = 0;
};

// Picks the candidate covering the most uncovered elements until everything
// is covered. Ties go to the lowest rank when seed == 0, otherwise to the
// earliest candidate in a seeded shuffle.
SolveResult greedy_cover(const CoverInstance& instance, std::uint64_t seed = 0);

enum class SymmetryBreaking {
  // Force 0^n: translations preserve Hamming distance.
  kTranslation,
  // Also force 1^n: symbol permutations fixing 0 in every coordinate map
  // 1^n onto any neighbor of 0^n, and 0^n needs a neighbor in the set.
  kTranslationAndNeighbor,
};

struct ExactOptions {
  std::chrono::duration<double> time_budget = std::chrono::minutes(10);
  std::uint64_t node_budget = 50'000'000;
  // A known upper bound on the optimum (e.g. from the ledger). The search
  // then looks for sets of at most this size.
  std::optional<std::uint64_t> initial_upper;
  // Seed of the greedy incumbent.
  std::uint64_t seed = 0;
  SymmetryBreaking symmetry = SymmetryBreaking::kTranslationAndNeighbor;
};

// Branch-and-bound over candidate inclusion. Branches on the uncovered
// element with the fewest remaining coverers, trying its coverers in
// decreasing residual coverage; the i-th branch excludes the first i-1.
SolveResult exact_cover(const CoverInstance& instance,
                        const ExactOptions& options = {});

// Brute-force minimum over all subsets of size 1..k_max; nullopt when no
// subset of size <= k_max is skirting. Guarded to q^n <= 81, k_max <= 6.
std::optional<int> exhaustive_oracle(int n, int q, int k_max);

// Writes the covering ILP in LP text format: one binary per candidate rank,
// minimize their sum, one ">= 1" row per universe element.
void emit_lp(const CoverInstance& instance, std::ostream& out);

}  // namespace skirt

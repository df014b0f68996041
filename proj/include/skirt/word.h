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

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "skirt/limits.h"

namespace skirt {

using Symbol = std::uint16_t;
// Mixed-radix rank of a word: sum of s_i * q^(n-1-i). Only meaningful when
// q^n fits in 64 bits.
using Rank = std::uint64_t;

// q^n, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t base, int exponent);

// A q-ary n-tuple over the canonical alphabet {0, ..., q-1}.
class Word {
 public:
  Word(int q, std::vector<Symbol> symbols);

  static Word constant(int n, int q, Symbol a);
  static Word unrank(Rank rank, int n, int q);

  int q() const { return q_; }
  int n() const { return static_cast<int>(symbols_.size()); }
  std::span<const Symbol> symbols() const { return symbols_; }
  Symbol operator[](int i) const { return symbols_[i]; }

  // Throws ResourceError if q^n overflows 64 bits.
  Rank rank() const;

  // Ordered by alphabet, then lexicographically by symbols.
  auto operator<=>(const Word&) const = default;

 private:
  int q_;
  std::vector<Symbol> symbols_;
};

// Space-separated symbols, the tuple-set row syntax.
std::string to_string(const Word& w, int offset = 0);

int hamming_distance(const Word& x, const Word& y);

// x skirts y when they differ in every coordinate.
bool skirts(const Word& x, const Word& y);

// The (q-1)^n words skirted by x, in lexicographic order. Throws
// ResourceError when (q-1)^n exceeds limits.enumeration_cap.
std::vector<Word> skirted_neighbors(
    const Word& x, const Limits& limits = Limits::FromEnvironment());

// Calls f(rank) for every word skirted by x, in increasing rank order.
// The caller guarantees q^n fits in a Rank.
template <typename F>
void for_each_skirted_rank(const Word& x, F&& f) {
  const int n = x.n();
  const Rank q = static_cast<Rank>(x.q());
  if (q < 2) return;
  std::vector<Rank> weight(n);
  Rank w = 1;
  for (int i = n - 1; i >= 0; --i) {
    weight[i] = w;
    w *= q;
  }
  // Per coordinate, the current symbol; starts at the smallest symbol != x_i.
  std::vector<Symbol> cur(n);
  Rank rank = 0;
  for (int i = 0; i < n; ++i) {
    cur[i] = x[i] == 0 ? 1 : 0;
    rank += cur[i] * weight[i];
  }
  while (true) {
    f(rank);
    int i = n - 1;
    for (; i >= 0; --i) {
      Symbol next = cur[i] + 1;
      if (next == x[i]) ++next;
      if (next < q) {
        rank += (next - cur[i]) * weight[i];
        cur[i] = next;
        break;
      }
      Symbol first = x[i] == 0 ? 1 : 0;
      rank -= (cur[i] - first) * weight[i];
      cur[i] = first;
    }
    if (i < 0) return;
  }
}

// A finite set of words sharing (n, q). Insertion order is preserved;
// duplicates are dropped and counted.
class TupleSet {
 public:
  TupleSet(int n, int q);
  TupleSet(int n, int q, std::vector<Word> words);

  int n() const { return n_; }
  int q() const { return q_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::vector<Word>& words() const { return words_; }
  std::size_t duplicates_dropped() const { return duplicates_dropped_; }

  // Returns false (and counts a duplicate) when w is already present.
  bool insert(Word w);
  bool contains(const Word& w) const;

  // Words in lexicographic order.
  std::vector<Word> sorted_words() const;

  bool operator==(const TupleSet& other) const {
    return n_ == other.n_ && q_ == other.q_ && words_ == other.words_;
  }

 private:
  int n_;
  int q_;
  std::vector<Word> words_;
  std::set<Word> index_;
  std::size_t duplicates_dropped_ = 0;
};

}  // namespace skirt

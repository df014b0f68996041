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

#include "skirt/word.h"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "skirt/error.h"

namespace skirt {
namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(value, &end, 10);
  if (end == value || *end != '\0') return fallback;
  return parsed;
}

void require_same_shape(const Word& x, const Word& y) {
  if (x.n() != y.n() || x.q() != y.q()) {
    throw DimensionMismatch("words differ in shape: (n=" + std::to_string(x.n()) +
                            ", q=" + std::to_string(x.q()) + ") vs (n=" +
                            std::to_string(y.n()) + ", q=" +
                            std::to_string(y.q()) + ")");
  }
}

}  // namespace

Limits Limits::FromEnvironment() {
  Limits limits;
  limits.universe_cap = env_or("SKIRT_UNIVERSE_CAP", limits.universe_cap);
  limits.enumeration_cap =
      env_or("SKIRT_ENUMERATION_CAP", limits.enumeration_cap);
  limits.work_cap = env_or("SKIRT_WORK_CAP", limits.work_cap);
  return limits;
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, int exponent) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

Word::Word(int q, std::vector<Symbol> symbols)
    : q_(q), symbols_(std::move(symbols)) {
  if (q_ < 2 || q_ > 65535) {
    throw ParameterError("alphabet size must lie in [2, 65535], got " +
                         std::to_string(q_));
  }
  if (symbols_.empty()) throw ParameterError("word length must be at least 1");
  for (Symbol s : symbols_) {
    if (s >= q_) {
      throw ParameterError("symbol " + std::to_string(s) +
                           " outside alphabet of size " + std::to_string(q_));
    }
  }
}

Word Word::constant(int n, int q, Symbol a) {
  if (n < 1) throw ParameterError("word length must be at least 1");
  return Word(q, std::vector<Symbol>(n, a));
}

Word Word::unrank(Rank rank, int n, int q) {
  if (n < 1) throw ParameterError("word length must be at least 1");
  std::vector<Symbol> symbols(n);
  for (int i = n - 1; i >= 0; --i) {
    symbols[i] = static_cast<Symbol>(rank % q);
    rank /= q;
  }
  return Word(q, std::move(symbols));
}

Rank Word::rank() const {
  if (!checked_power(q_, n())) {
    throw ResourceError("q^n does not fit in a 64-bit rank");
  }
  Rank r = 0;
  for (Symbol s : symbols_) r = r * q_ + s;
  return r;
}

std::string to_string(const Word& w, int offset) {
  std::string out;
  for (int i = 0; i < w.n(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(w[i] + offset);
  }
  return out;
}

int hamming_distance(const Word& x, const Word& y) {
  require_same_shape(x, y);
  int d = 0;
  for (int i = 0; i < x.n(); ++i) d += x[i] != y[i];
  return d;
}

bool skirts(const Word& x, const Word& y) {
  return hamming_distance(x, y) == x.n();
}

std::vector<Word> skirted_neighbors(const Word& x, const Limits& limits) {
  const auto count = checked_power(x.q() - 1, x.n());
  if (!count || *count > limits.enumeration_cap) {
    throw ResourceError("(q-1)^n exceeds the enumeration cap");
  }
  std::vector<Word> out;
  out.reserve(*count);
  // Odometer over the q-1 admissible symbols of every coordinate.
  std::vector<Symbol> cur(x.n());
  for (int i = 0; i < x.n(); ++i) cur[i] = x[i] == 0 ? 1 : 0;
  while (true) {
    out.emplace_back(x.q(), cur);
    int i = x.n() - 1;
    for (; i >= 0; --i) {
      Symbol next = cur[i] + 1;
      if (next == x[i]) ++next;
      if (next < x.q()) {
        cur[i] = next;
        break;
      }
      cur[i] = x[i] == 0 ? 1 : 0;
    }
    if (i < 0) break;
  }
  return out;
}

TupleSet::TupleSet(int n, int q) : n_(n), q_(q) {
  if (n < 1) throw ParameterError("word length must be at least 1");
  if (q < 2) throw ParameterError("alphabet size must be at least 2");
}

TupleSet::TupleSet(int n, int q, std::vector<Word> words) : TupleSet(n, q) {
  words_.reserve(words.size());
  for (Word& w : words) insert(std::move(w));
}

bool TupleSet::insert(Word w) {
  if (w.n() != n_ || w.q() != q_) {
    throw DimensionMismatch("word of shape (n=" + std::to_string(w.n()) +
                            ", q=" + std::to_string(w.q()) +
                            ") does not belong to a set over (n=" +
                            std::to_string(n_) + ", q=" + std::to_string(q_) +
                            ")");
  }
  if (!index_.insert(w).second) {
    ++duplicates_dropped_;
    return false;
  }
  words_.push_back(std::move(w));
  return true;
}

bool TupleSet::contains(const Word& w) const { return index_.contains(w); }

std::vector<Word> TupleSet::sorted_words() const {
  return {index_.begin(), index_.end()};
}

}  // namespace skirt

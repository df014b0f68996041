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

#include "skirt/constructions.h"

#include <string>
#include <utility>

#include "skirt/error.h"

namespace skirt {

TupleSet product_construct(const TupleSet& a, const TupleSet& b) {
  if (a.q() != b.q()) {
    throw DimensionMismatch("product needs equal alphabets, got q=" +
                            std::to_string(a.q()) + " and q=" +
                            std::to_string(b.q()));
  }
  TupleSet out(a.n() + b.n(), a.q());
  for (const Word& x : a.words()) {
    for (const Word& y : b.words()) {
      std::vector<Symbol> symbols(x.symbols().begin(), x.symbols().end());
      symbols.insert(symbols.end(), y.symbols().begin(), y.symbols().end());
      out.insert(Word(a.q(), std::move(symbols)));
    }
  }
  return out;
}

TupleSet embed_alphabet(const TupleSet& s, int q_new) {
  if (q_new < s.q()) {
    throw ParameterError("cannot embed alphabet " + std::to_string(s.q()) +
                         " into smaller alphabet " + std::to_string(q_new));
  }
  TupleSet out(s.n(), q_new);
  for (const Word& w : s.words()) {
    out.insert(Word(q_new, {w.symbols().begin(), w.symbols().end()}));
  }
  return out;
}

TupleSet scalar_multiples(int n, int q) {
  if (n < 1 || n >= q) {
    throw ParameterError("scalar multiples need 1 <= n < q, got n=" +
                         std::to_string(n) + " q=" + std::to_string(q));
  }
  TupleSet out(n, q);
  for (int a = 0; a <= n; ++a) out.insert(Word::constant(n, q, a));
  return out;
}

TupleSet diag_union(int q) {
  if (q < 3) throw ParameterError("diag_union needs q >= 3");
  TupleSet out(q, q);
  for (int a = 1; a <= q - 1; ++a) out.insert(Word::constant(q, q, a));
  for (int i = 0; i < q; ++i) {
    std::vector<Symbol> unit(q, 0);
    unit[i] = 1;
    out.insert(Word(q, std::move(unit)));
  }
  return out;
}

TupleSet block3(int n) {
  if (n < 2 || n % 2 != 0) {
    throw ParameterError("block3 needs an even n >= 2, got " + std::to_string(n));
  }
  const int blocks = n / 2;
  if (blocks > 24) throw ResourceError("block3 output too large to enumerate");
  TupleSet out(n, 3);

  // Blocks 01 (bit 0) and 10 (bit 1), most significant block first.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks); ++mask) {
    std::vector<Symbol> symbols(n);
    for (int b = 0; b < blocks; ++b) {
      const bool one = (mask >> (blocks - 1 - b)) & 1u;
      symbols[2 * b] = one ? 1 : 0;
      symbols[2 * b + 1] = one ? 0 : 1;
    }
    out.insert(Word(3, std::move(symbols)));
  }

  // Blocks 00, 11, 22 as a base-3 counter, keeping odd counts of 22.
  std::vector<Symbol> digits(blocks, 0);
  while (true) {
    int twos = 0;
    for (Symbol d : digits) twos += d == 2;
    if (twos % 2 == 1) {
      std::vector<Symbol> symbols(n);
      for (int b = 0; b < blocks; ++b) symbols[2 * b] = symbols[2 * b + 1] = digits[b];
      out.insert(Word(3, std::move(symbols)));
    }
    int b = blocks - 1;
    while (b >= 0 && digits[b] == 2) digits[b--] = 0;
    if (b < 0) break;
    ++digits[b];
  }
  return out;
}

BigInt block3_size(int n) {
  if (n < 2 || n % 2 != 0) {
    throw ParameterError("block3_size needs an even n >= 2, got " + std::to_string(n));
  }
  const unsigned half = n / 2;
  BigInt size = big_pow(2, half);
  const unsigned terms = (n + 3) / 4;
  for (unsigned i = 1; i <= terms; ++i) {
    if (2 * i - 1 > half) break;
    size += binomial(half, 2 * i - 1) * big_pow(2, half - 2 * i + 1);
  }
  return size;
}

ConstructionReport from_skirting_array(const SkirtArray& array, int t,
                                       int q_target, bool trust_uncertified) {
  const int v = array.q();
  const int n = array.n();
  if (v >= q_target) {
    throw ParameterError("array alphabet " + std::to_string(v) +
                         " must be smaller than the target alphabet " +
                         std::to_string(q_target));
  }
  if (t != n + v - q_target) {
    throw ParameterError("strength must equal n + v - q = " +
                         std::to_string(n + v - q_target) + ", got " +
                         std::to_string(t));
  }
  if (t < 1) throw ParameterError("strength n + v - q must be at least 1");
  const bool certified = array.certified_strength().value_or(0) >= t;
  if (!certified && !trust_uncertified) {
    throw ParameterError("array is not certified with strength " +
                         std::to_string(t) + "; verify it or pass the trust flag");
  }

  ConstructionReport report{.set = TupleSet(n, q_target), .rule = "from-sa"};
  for (const Word& row : array.rows()) {
    report.set.insert(Word(q_target, {row.symbols().begin(), row.symbols().end()}));
  }
  for (int a = v; a < q_target; ++a) {
    report.set.insert(Word::constant(n, q_target, a));
  }
  report.claimed_size = report.set.size();
  report.inputs = {{"rows", std::to_string(array.num_rows())},
                   {"t", std::to_string(t)},
                   {"n", std::to_string(n)},
                   {"v", std::to_string(v)},
                   {"q_target", std::to_string(q_target)},
                   {"strength", certified ? "certified" : "trusted-uncertified"}};
  return report;
}

}  // namespace skirt

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

#include <map>
#include <string>

#include "skirt/arrays.h"
#include "skirt/bigint.h"
#include "skirt/word.h"

namespace skirt {

struct ConstructionReport {
  TupleSet set;
  std::string rule;
  std::size_t claimed_size = 0;
  std::map<std::string, std::string> inputs;
};

// Concatenations a||b for a in A, b in B (A-major order).
TupleSet product_construct(const TupleSet& a, const TupleSet& b);

// The same words read over the larger alphabet q_new. A skirting set stays
// skirting; the input is not re-verified.
TupleSet embed_alphabet(const TupleSet& s, int q_new);

// {a * 1 : a = 0..n} for n < q. Any n-tuple has at most n distinct entries,
// so one of the n+1 constants avoids all of them.
TupleSet scalar_multiples(int n, int q);

// {a * 1 : a = 1..q-1} together with the unit vectors e_1..e_q of Z_q^q.
TupleSet diag_union(int q);

// Skirting set of Z_3^n, n even, built from length-2 blocks: all words over
// {01, 10}, then all words over {00, 11, 22} with an odd number of 22
// blocks. Each part is emitted in lexicographic order.
TupleSet block3(int n);

// 2^(n/2) + sum_{i=1}^{ceil(n/4)} C(n/2, 2i-1) 2^(n/2-2i+1).
BigInt block3_size(int n);

// Rows of an SA(N; t, n, v) read over Z_q (q = q_target > v), followed by the
// constant words a * 1 for a = v..q-1. Needs t = n + v - q. An array without
// a matching strength certificate is refused unless `trust_uncertified`;
// the report records which path was taken.
ConstructionReport from_skirting_array(const SkirtArray& array, int t,
                                       int q_target,
                                       bool trust_uncertified = false);

}  // namespace skirt

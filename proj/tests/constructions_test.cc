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

#include <doctest.h>

#include <random>

#include "skirt/constructions.h"
#include "skirt/cover.h"
#include "skirt/error.h"
#include "skirt/verify.h"

using namespace skirt;

namespace {

Word w(int q, std::vector<Symbol> s) { return Word(q, std::move(s)); }

TupleSet set_of(int n, int q, const std::vector<std::string>& rows) {
  TupleSet s(n, q);
  for (const std::string& row : rows) {
    std::vector<Symbol> symbols;
    for (char c : row) symbols.push_back(static_cast<Symbol>(c - '0'));
    s.insert(Word(q, std::move(symbols)));
  }
  return s;
}

bool verifies(const TupleSet& s) { return verify_skirting_set(s).is_skirting; }

}  // namespace

TEST_CASE("product construction") {
  const TupleSet diag = scalar_multiples(2, 3);
  const TupleSet p = product_construct(diag, diag);
  CHECK(p.n() == 4);
  CHECK(p.size() == 9);
  CHECK(verifies(p));
  CHECK(p.words().front() == w(3, {0, 0, 0, 0}));
  CHECK(p.words()[1] == w(3, {0, 0, 1, 1}));
  CHECK_THROWS_AS(product_construct(diag, scalar_multiples(2, 4)), DimensionMismatch);
}

TEST_CASE("alphabet embedding") {
  const TupleSet e = embed_alphabet(scalar_multiples(2, 3), 4);
  CHECK(e.q() == 4);
  CHECK(e.size() == 3);
  CHECK(verifies(e));
  CHECK_THROWS_AS(embed_alphabet(scalar_multiples(2, 4), 3), ParameterError);
}

TEST_CASE("scalar multiples") {
  CHECK(scalar_multiples(2, 3).words() ==
        std::vector<Word>{w(3, {0, 0}), w(3, {1, 1}), w(3, {2, 2})});
  CHECK(scalar_multiples(1, 2).words() == std::vector<Word>{w(2, {0}), w(2, {1})});
  const TupleSet s = scalar_multiples(3, 5);
  CHECK(s.size() == 4);
  CHECK(verifies(s));
  CHECK_THROWS_AS(scalar_multiples(3, 3), ParameterError);
  for (int q = 2; q <= 6; ++q) {
    for (int n = 1; n < q; ++n) CHECK(verifies(scalar_multiples(n, q)));
  }
}

TEST_CASE("diagonal union") {
  CHECK(diag_union(3) == set_of(3, 3, {"111", "222", "100", "010", "001"}));
  CHECK(diag_union(4).size() == 7);
  CHECK(verifies(diag_union(4)));
  CHECK(diag_union(5).size() == 9);
  CHECK(verifies(diag_union(5)));
  CHECK_THROWS_AS(diag_union(2), ParameterError);
}

TEST_CASE("block construction over Z_3") {
  CHECK(block3(2) == set_of(2, 3, {"01", "10", "22"}));
  const TupleSet four = block3(4);
  CHECK(four == set_of(4, 3, {"0101", "0110", "1001", "1010", "0022", "1122", "2200", "2211"}));
  CHECK(verifies(four));
  CHECK(block3(6).size() == 21);
  for (int n = 2; n <= 12; n += 2) {
    const TupleSet s = block3(n);
    CHECK(BigInt(s.size()) == block3_size(n));
    CHECK(verifies(s));
  }
  CHECK(block3(16).size() == 3536);
  CHECK_THROWS_AS(block3(5), ParameterError);
  CHECK_THROWS_AS(block3_size(7), ParameterError);
}

TEST_CASE("block construction size formula") {
  const std::vector<std::pair<int, int>> sizes{{2, 3},     {4, 8},     {6, 21},
                                               {8, 56},    {10, 153},  {12, 428},
                                               {14, 1221}, {16, 3536}};
  for (auto [n, size] : sizes) CHECK(block3_size(n) == size);
}

TEST_CASE("construction from a skirting array") {
  SkirtArray oa(3, 2, {w(2, {0, 0, 0}), w(2, {0, 1, 1}), w(2, {1, 0, 1}), w(2, {1, 1, 0})});
  CHECK_THROWS_AS(from_skirting_array(oa, 2, 3), ParameterError);
  const ConstructionReport trusted = from_skirting_array(oa, 2, 3, /*trust_uncertified=*/true);
  CHECK(trusted.inputs.at("strength") == "trusted-uncertified");

  REQUIRE(verify_array_strength(oa, 2).holds);
  const ConstructionReport report = from_skirting_array(oa, 2, 3);
  CHECK(report.rule == "from-sa");
  CHECK(report.inputs.at("strength") == "certified");
  CHECK(report.claimed_size == report.set.size());
  CHECK(report.set.size() == 5);
  CHECK(report.set.words().back() == w(3, {2, 2, 2}));
  CHECK(verifies(report.set));

  CHECK_THROWS_AS(from_skirting_array(oa, 1, 3), ParameterError);
  CHECK_THROWS_AS(from_skirting_array(oa, 3, 2), ParameterError);
}

TEST_CASE("product and embedding preserve skirting on random verified sets") {
  std::mt19937_64 rng(3);
  auto random_skirting = [&](int n, int q) {
    const CoverInstance inst = build_cover_instance(n, q);
    TupleSet s = greedy_cover(inst, 1 + rng() % 1000).best_set;
    // Pad with random extra words; supersets of skirting sets are skirting.
    const Rank size = inst.universe_size();
    for (int extra = rng() % 4; extra > 0; --extra) s.insert(Word::unrank(rng() % size, n, q));
    return s;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const int q = 3 + static_cast<int>(rng() % 2);
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 2);
    const TupleSet a = random_skirting(n, q);
    const TupleSet b = random_skirting(m, q);
    REQUIRE(verifies(a));
    REQUIRE(verifies(b));
    const TupleSet p = product_construct(a, b);
    CHECK(p.size() == a.size() * b.size());
    CHECK(verifies(p));
    CHECK(verifies(embed_alphabet(a, q + 1 + static_cast<int>(rng() % 3))));
  }
}

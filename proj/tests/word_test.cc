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

#include <algorithm>
#include <random>
#include <sstream>

#include "skirt/error.h"
#include "skirt/io.h"
#include "skirt/verify.h"
#include "skirt/word.h"

using namespace skirt;

namespace {

Word w(int q, std::vector<Symbol> s) { return Word(q, std::move(s)); }

std::vector<Word> universe(int n, int q) {
  std::vector<Word> all;
  const Rank size = *checked_power(q, n);
  for (Rank r = 0; r < size; ++r) all.push_back(Word::unrank(r, n, q));
  return all;
}

// Reference verdict: a double loop over the universe and the set.
std::vector<Word> naive_uncovered(const TupleSet& s) {
  std::vector<Word> missing;
  for (const Word& y : universe(s.n(), s.q())) {
    const bool covered = std::any_of(s.words().begin(), s.words().end(),
                                     [&](const Word& x) { return skirts(x, y); });
    if (!covered) missing.push_back(y);
  }
  return missing;
}

}  // namespace

TEST_CASE("hamming distance") {
  CHECK(hamming_distance(w(3, {0, 1, 2}), w(3, {0, 2, 1})) == 2);
  CHECK(hamming_distance(w(3, {0, 1, 2}), w(3, {0, 1, 2})) == 0);
  CHECK(hamming_distance(w(2, {0, 1, 1, 0, 1}), w(2, {1, 0, 0, 1, 0})) == 5);
  CHECK_THROWS_AS(hamming_distance(w(3, {0, 1}), w(3, {0, 1, 2})), DimensionMismatch);
  CHECK_THROWS_AS(hamming_distance(w(3, {0, 1}), w(4, {0, 1})), DimensionMismatch);
}

TEST_CASE("skirts") {
  CHECK(skirts(w(3, {0, 0}), w(3, {1, 2})));
  CHECK_FALSE(skirts(w(3, {0, 0}), w(3, {0, 0})));
  CHECK_FALSE(skirts(w(3, {0, 1}), w(3, {2, 1})));
}

TEST_CASE("words reject symbols outside the alphabet") {
  CHECK_THROWS_AS(w(3, {0, 3}), ParameterError);
}

TEST_CASE("rank and unrank are inverse") {
  CHECK(w(3, {1, 0, 2}).rank() == 11);
  for (Rank r = 0; r < 64; ++r) CHECK(Word::unrank(r, 3, 4).rank() == r);
  CHECK_FALSE(checked_power(3, 41).has_value());
  CHECK(*checked_power(3, 40) == 12157665459056928801ULL);
}

TEST_CASE("skirted neighbors of (0,0) over Z_3") {
  const auto got = skirted_neighbors(w(3, {0, 0}));
  const std::vector<Word> expected{w(3, {1, 1}), w(3, {1, 2}), w(3, {2, 1}), w(3, {2, 2})};
  CHECK(got == expected);
}

TEST_CASE("binary words skirt only their complement") {
  for (const Word& x : universe(4, 2)) {
    const auto got = skirted_neighbors(x);
    REQUIRE(got.size() == 1);
    CHECK(hamming_distance(x, got.front()) == 4);
  }
}

TEST_CASE("skirted neighbors of (0,1,2) match a filter of all 27 words") {
  const Word x = w(3, {0, 1, 2});
  std::vector<Word> filtered;
  for (const Word& y : universe(3, 3)) {
    if (skirts(x, y)) filtered.push_back(y);
  }
  CHECK(filtered.size() == 8);
  CHECK(skirted_neighbors(x) == filtered);
  for (const Word& y : filtered) {
    for (int i = 0; i < 3; ++i) CHECK(y[i] != x[i]);
  }
}

TEST_CASE("rank enumeration agrees with the word enumeration") {
  for (int q = 2; q <= 5; ++q) {
    for (const Word& x : universe(3, q)) {
      std::vector<Rank> ranks;
      for_each_skirted_rank(x, [&](Rank r) { ranks.push_back(r); });
      std::vector<Rank> expected;
      for (const Word& y : skirted_neighbors(x)) expected.push_back(y.rank());
      CHECK(ranks == expected);
    }
  }
}

TEST_CASE("skirts is symmetric, irreflexive, and has degree (q-1)^n") {
  for (int q = 2; q <= 4; ++q) {
    for (int n = 1; n <= 3; ++n) {
      const auto all = universe(n, q);
      for (const Word& x : all) {
        CHECK_FALSE(skirts(x, x));
        std::size_t degree = 0;
        for (const Word& y : all) {
          CHECK(skirts(x, y) == skirts(y, x));
          degree += skirts(x, y);
        }
        CHECK(degree == *checked_power(q - 1, n));
        CHECK(skirted_neighbors(x).size() == degree);
      }
    }
  }
}

TEST_CASE("enumeration cap") {
  Limits limits;
  limits.enumeration_cap = 7;
  CHECK_THROWS_AS(skirted_neighbors(w(3, {0, 0, 0}), limits), ResourceError);
  CHECK(skirted_neighbors(w(3, {0, 0}), limits).size() == 4);
}

TEST_CASE("tuple sets drop duplicates") {
  TupleSet s(2, 3);
  CHECK(s.insert(w(3, {1, 1})));
  CHECK_FALSE(s.insert(w(3, {1, 1})));
  CHECK(s.insert(w(3, {0, 0})));
  CHECK(s.size() == 2);
  CHECK(s.duplicates_dropped() == 1);
  CHECK(s.sorted_words().front() == w(3, {0, 0}));
  CHECK_THROWS_AS(s.insert(w(3, {1, 1, 1})), DimensionMismatch);
}

TEST_CASE("verifier examples") {
  SUBCASE("scalar multiples over Z_3^2") {
    const TupleSet s(2, 3, {w(3, {0, 0}), w(3, {1, 1}), w(3, {2, 2})});
    const Verdict v = verify_skirting_set(s);
    CHECK(v.is_skirting);
    CHECK(v.counterexamples.empty());
    CHECK(v.checked == 9);
  }
  SUBCASE("a singleton misses itself first") {
    const TupleSet s(2, 3, {w(3, {0, 0})});
    const Verdict v = verify_skirting_set(s);
    CHECK_FALSE(v.is_skirting);
    REQUIRE(v.counterexamples.size() == 1);
    CHECK(v.counterexamples.front() == w(3, {0, 0}));
  }
  SUBCASE("all counterexamples, lexicographic") {
    const TupleSet s(2, 3, {w(3, {0, 0})});
    VerifyOptions options;
    options.mode = VerifyMode::kAllCounterexamples;
    const Verdict v = verify_skirting_set(s, options);
    CHECK(v.counterexamples == std::vector<Word>{w(3, {0, 0}), w(3, {0, 1}), w(3, {0, 2}),
                                                 w(3, {1, 0}), w(3, {2, 0})});
  }
  SUBCASE("empty set") {
    CHECK_FALSE(verify_skirting_set(TupleSet(3, 3)).is_skirting);
  }
  SUBCASE("universe cap") {
    VerifyOptions options;
    options.limits.universe_cap = 8;
    CHECK_THROWS_AS(verify_skirting_set(TupleSet(2, 3), options), ResourceError);
  }
}

TEST_CASE("singletons never skirt") {
  for (int q = 2; q <= 4; ++q) {
    for (const Word& x : universe(2, q)) {
      CHECK_FALSE(verify_skirting_set(TupleSet(2, q, {x})).is_skirting);
    }
  }
}

TEST_CASE("verifier agrees with the naive double loop") {
  std::mt19937_64 rng(7);
  for (int q = 2; q <= 4; ++q) {
    for (int n = 1; n <= 3; ++n) {
      const auto all = universe(n, q);
      for (int trial = 0; trial < 60; ++trial) {
        TupleSet s(n, q);
        const std::size_t target = rng() % (all.size() + 1);
        while (s.size() < target) s.insert(all[rng() % all.size()]);
        VerifyOptions options;
        options.mode = VerifyMode::kAllCounterexamples;
        const Verdict v = verify_skirting_set(s, options);
        const auto expected = naive_uncovered(s);
        CHECK(v.counterexamples == expected);
        CHECK(v.is_skirting == expected.empty());
        if (v.is_skirting) {
          for (const Word& y : all) {
            CHECK(std::any_of(s.words().begin(), s.words().end(), [&](const Word& x) {
              for (int i = 0; i < n; ++i) {
                if (x[i] == y[i]) return false;
              }
              return true;
            }));
          }
        }
      }
    }
  }
}

TEST_CASE("parallel and single-threaded verdicts agree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int q = 3 + static_cast<int>(rng() % 3);
    const int n = 4 + static_cast<int>(rng() % 3);
    TupleSet s(n, q);
    const Rank size = *checked_power(q, n);
    const std::size_t target = 5 + rng() % 60;
    while (s.size() < target) s.insert(Word::unrank(rng() % size, n, q));
    VerifyOptions single;
    single.mode = VerifyMode::kAllCounterexamples;
    VerifyOptions parallel = single;
    parallel.workers = 4;
    const Verdict a = verify_skirting_set(s, single);
    const Verdict b = verify_skirting_set(s, parallel);
    CHECK(a.is_skirting == b.is_skirting);
    CHECK(a.counterexamples == b.counterexamples);
    CHECK(a.checked == b.checked);
  }
}

TEST_CASE("tuple-set text format") {
  SUBCASE("round trip") {
    const TupleSet s(3, 4, {w(4, {3, 0, 1}), w(4, {0, 0, 0}), w(4, {2, 2, 1})});
    std::ostringstream out;
    write_tuple_set(s, out);
    CHECK(out.str() == "set n=3 q=4\n3 0 1\n0 0 0\n2 2 1\n");
    std::istringstream in(out.str());
    const ParsedSet parsed = read_tuple_set(in);
    CHECK(parsed.set == s);
    CHECK(parsed.offset == 0);
  }
  SUBCASE("comments, blank lines and duplicates") {
    std::istringstream in("# a comment\n\nset n=2 q=3\n0 0\n# inline\n1 1\n0 0\n");
    const ParsedSet parsed = read_tuple_set(in);
    CHECK(parsed.set.size() == 2);
    CHECK(parsed.duplicates == 1);
  }
  SUBCASE("one-based input normalizes to zero-based") {
    std::istringstream in("set n=2 q=3\n1 1\n3 2\n");
    const ParsedSet parsed = read_tuple_set(in, /*one_based=*/true);
    CHECK(parsed.offset == 1);
    CHECK(parsed.set.words() == std::vector<Word>{w(3, {0, 0}), w(3, {2, 1})});
    std::ostringstream out;
    write_tuple_set(parsed.set, out, parsed.offset);
    CHECK(out.str() == "set n=2 q=3\n1 1\n3 2\n");
  }
  SUBCASE("malformed input") {
    for (const char* text : {"", "set n=2\n", "set n=2 q=3\n0 1 2\n", "set n=2 q=3\n0 3\n",
                             "sets n=2 q=3\n", "set n=2 q=3 z=1\n", "set n=2 q=3\n0 x\n"}) {
      std::istringstream in(text);
      CHECK_THROWS_AS(read_tuple_set(in), IoError);
    }
    std::istringstream zero("set n=2 q=3\n0 1\n");
    CHECK_THROWS_AS(read_tuple_set(zero, /*one_based=*/true), IoError);
  }
}

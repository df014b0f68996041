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

#include <sstream>
#include <string>

#include "skirt/bounds.h"
#include "skirt/cover.h"
#include "skirt/error.h"
#include "skirt/verify.h"

using namespace skirt;

TEST_CASE("cover instance shape") {
  const CoverInstance a = build_cover_instance(2, 3);
  CHECK(a.universe_size() == 9);
  CHECK(a.degree() == 4);
  const CoverInstance b = build_cover_instance(3, 3);
  CHECK(b.universe_size() == 27);
  CHECK(b.degree() == 8);
  const CoverInstance c = build_cover_instance(1, 5);
  CHECK(c.degree() == 4);
  for (Rank x = 0; x < 5; ++x) {
    for (std::uint32_t y : c.covers(x)) CHECK(y != x);
  }
}

TEST_CASE("coverage relation is symmetric") {
  const CoverInstance inst = build_cover_instance(3, 4);
  for (Rank x = 0; x < inst.universe_size(); ++x) {
    for (std::uint32_t y : inst.covers(x)) {
      const auto back = inst.covers(y);
      CHECK(std::find(back.begin(), back.end(), x) != back.end());
    }
  }
}

TEST_CASE("greedy cover") {
  SUBCASE("(2,3), seed 0") {
    const SolveResult r = greedy_cover(build_cover_instance(2, 3));
    CHECK(r.status == SolveStatus::kFeasible);
    CHECK(r.best_set.size() == 3);
    CHECK(verify_skirting_set(r.best_set).is_skirting);
  }
  SUBCASE("(3,3), seed 0") {
    const SolveResult r = greedy_cover(build_cover_instance(3, 3));
    CHECK(r.best_set.size() == 6);
    CHECK(verify_skirting_set(r.best_set).is_skirting);
  }
  SUBCASE("binary alphabet takes every word") {
    CHECK(greedy_cover(build_cover_instance(5, 2)).best_set.size() == 32);
  }
  SUBCASE("always verifies") {
    for (int q = 2; q <= 5; ++q) {
      for (int n = 1; n <= 4; ++n) {
        for (std::uint64_t seed : {0, 1, 2, 99}) {
          const SolveResult r = greedy_cover(build_cover_instance(n, q), seed);
          CHECK(verify_skirting_set(r.best_set).is_skirting);
          CHECK(r.seed == seed);
        }
      }
    }
  }
  SUBCASE("seeded runs repeat") {
    const CoverInstance inst = build_cover_instance(4, 3);
    CHECK(greedy_cover(inst, 5).best_set == greedy_cover(inst, 5).best_set);
  }
}

TEST_CASE("exact cover small optima") {
  struct Case {
    int n, q;
    std::size_t optimum;
  };
  for (const Case& c : {Case{1, 2, 2}, Case{2, 2, 4}, Case{1, 3, 2}, Case{2, 3, 3},
                        Case{3, 3, 5}, Case{4, 3, 8}, Case{2, 4, 3}, Case{3, 4, 4},
                        Case{4, 4, 7}, Case{2, 5, 3}, Case{3, 5, 4}}) {
    CAPTURE(c.n);
    CAPTURE(c.q);
    const SolveResult r = exact_cover(build_cover_instance(c.n, c.q));
    CHECK(r.status == SolveStatus::kOptimal);
    CHECK(r.best_set.size() == c.optimum);
    CHECK(r.proven_lower == c.optimum);
    CHECK(verify_skirting_set(r.best_set).is_skirting);
    CHECK(sphere_lower(c.n, c.q) <= r.proven_lower);
    CHECK(r.best_set.size() <= greedy_cover(build_cover_instance(c.n, c.q)).best_set.size());
  }
}

TEST_CASE("symmetry breaking choices agree") {
  for (int q = 3; q <= 4; ++q) {
    for (int n = 1; n <= 3; ++n) {
      ExactOptions translation;
      translation.symmetry = SymmetryBreaking::kTranslation;
      ExactOptions neighbor;
      neighbor.symmetry = SymmetryBreaking::kTranslationAndNeighbor;
      const CoverInstance inst = build_cover_instance(n, q);
      const SolveResult a = exact_cover(inst, translation);
      const SolveResult b = exact_cover(inst, neighbor);
      CHECK(a.best_set.size() == b.best_set.size());
      CHECK(a.best_set.contains(Word::constant(n, q, 0)));
      CHECK(b.best_set.contains(Word::constant(n, q, 1)));
      const auto oracle = exhaustive_oracle(n, q, 6);
      REQUIRE(oracle.has_value());
      CHECK(static_cast<std::size_t>(*oracle) == a.best_set.size());
    }
  }
}

TEST_CASE("exact cover with a known upper bound") {
  ExactOptions options;
  options.initial_upper = 8;
  const SolveResult r = exact_cover(build_cover_instance(4, 3), options);
  CHECK(r.status == SolveStatus::kOptimal);
  CHECK(r.best_set.size() == 8);
  options.initial_upper = 12;
  CHECK(exact_cover(build_cover_instance(4, 3), options).best_set.size() == 8);
}

TEST_CASE("exact cover budget exhaustion") {
  ExactOptions options;
  options.node_budget = 50;
  const SolveResult r = exact_cover(build_cover_instance(4, 4), options);
  CHECK(r.status == SolveStatus::kBudgetExhausted);
  CHECK(verify_skirting_set(r.best_set).is_skirting);
  CHECK(r.proven_lower >= 4);
  CHECK(r.proven_lower <= 7);
  CHECK(r.best_set.size() >= 7);
}

TEST_CASE("exact cover is deterministic") {
  const CoverInstance inst = build_cover_instance(4, 3);
  const SolveResult a = exact_cover(inst);
  const SolveResult b = exact_cover(inst);
  CHECK(a.nodes == b.nodes);
  CHECK(a.best_set == b.best_set);
  ExactOptions limited;
  limited.node_budget = 1000;
  const CoverInstance big = build_cover_instance(5, 3);
  const SolveResult c = exact_cover(big, limited);
  const SolveResult d = exact_cover(big, limited);
  CHECK(c.nodes == d.nodes);
  CHECK(c.best_set == d.best_set);
  CHECK(c.proven_lower == d.proven_lower);
}

TEST_CASE("exhaustive oracle") {
  CHECK(exhaustive_oracle(2, 3, 4) == 3);
  CHECK(exhaustive_oracle(2, 4, 4) == 3);
  CHECK(exhaustive_oracle(1, 3, 2) == 2);
  CHECK(exhaustive_oracle(3, 3, 4) == std::nullopt);
  CHECK(exhaustive_oracle(3, 3, 5) == 5);
  CHECK_THROWS_AS(exhaustive_oracle(5, 3, 4), ResourceError);
  CHECK_THROWS_AS(exhaustive_oracle(2, 3, 7), ResourceError);
}

TEST_CASE("LP model") {
  std::ostringstream out;
  emit_lp(build_cover_instance(2, 3), out);
  const std::string lp = out.str();
  CHECK(lp.find("Minimize\n obj: + x0 + x1 + x2 + x3 + x4 + x5 + x6 + x7 + x8\n") !=
        std::string::npos);
  CHECK(lp.find(" c0: + x4 + x5 + x7 + x8 >= 1\n") != std::string::npos);
  CHECK(lp.find(" c8: + x0 + x1 + x3 + x4 >= 1\n") != std::string::npos);
  CHECK(lp.find("Binary\n") != std::string::npos);
  CHECK(lp.substr(lp.size() - 4) == "End\n");

  std::ostringstream again;
  emit_lp(build_cover_instance(2, 3), again);
  CHECK(again.str() == lp);

  std::ostringstream three;
  emit_lp(build_cover_instance(3, 3), three);
  std::istringstream lines(three.str());
  int constraints = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind(" c", 0) == 0) {
      ++constraints;
      CHECK(std::count(line.begin(), line.end(), 'x') == 8);
    }
  }
  CHECK(constraints == 27);
}

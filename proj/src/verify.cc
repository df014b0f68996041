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

#include "skirt/verify.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "skirt/bitset.h"
#include "skirt/error.h"

namespace skirt {
namespace {

// Marks every rank skirted by words[begin, end) into `covered`. With
// `shared`, concurrent writers may touch the same block.
void mark_range(const std::vector<Word>& words, std::size_t begin,
                std::size_t end, Bitset& covered, bool shared) {
  auto& blocks = covered.mutable_blocks();
  for (std::size_t k = begin; k < end; ++k) {
    for_each_skirted_rank(words[k], [&](Rank r) {
      const Bitset::Block bit = Bitset::Block{1} << (r % Bitset::kBlockBits);
      auto& block = blocks[r / Bitset::kBlockBits];
      if (shared) {
        std::atomic_ref<Bitset::Block>(block).fetch_or(
            bit, std::memory_order_relaxed);
      } else {
        block |= bit;
      }
    });
  }
}

// Appends the unset ranks in [begin, end) to `out`, stopping after the
// first one when `first_only`.
void collect_uncovered(const Bitset& covered, std::uint64_t begin,
                       std::uint64_t end, bool first_only,
                       std::vector<Rank>& out) {
  for (std::uint64_t r = begin; r < end; ++r) {
    if (!covered.test(r)) {
      out.push_back(r);
      if (first_only) return;
    }
  }
}

}  // namespace

Verdict verify_skirting_set(const TupleSet& s, const VerifyOptions& options) {
  const auto universe = checked_power(s.q(), s.n());
  if (!universe || *universe > options.limits.universe_cap) {
    throw ResourceError("q^n exceeds the universe cap for verification");
  }
  const bool first_only = options.mode == VerifyMode::kFirstCounterexample;
  const int workers = std::max(1, options.workers);

  Bitset covered(*universe);
  const auto& words = s.words();
  if (workers == 1 || words.size() < 2) {
    mark_range(words, 0, words.size(), covered, false);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (words.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(words.size(), w * chunk);
      const std::size_t end = std::min(words.size(), begin + chunk);
      if (begin == end) break;
      pool.emplace_back([&, begin, end] {
        mark_range(words, begin, end, covered, true);
      });
    }
  }

  std::vector<Rank> missing;
  if (workers == 1 || first_only) {
    collect_uncovered(covered, 0, *universe, first_only, missing);
  } else {
    // Chunks are block aligned and concatenated in rank order.
    std::vector<std::vector<Rank>> parts(workers);
    const std::uint64_t blocks = covered.num_blocks();
    const std::uint64_t per = (blocks + workers - 1) / workers;
    {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) {
        const std::uint64_t begin =
            std::min<std::uint64_t>(*universe, w * per * Bitset::kBlockBits);
        const std::uint64_t end = std::min<std::uint64_t>(
            *universe, (w + 1) * per * Bitset::kBlockBits);
        pool.emplace_back([&, w, begin, end] {
          collect_uncovered(covered, begin, end, false, parts[w]);
        });
      }
    }
    for (auto& part : parts) missing.insert(missing.end(), part.begin(), part.end());
  }

  Verdict verdict;
  verdict.is_skirting = missing.empty();
  verdict.checked = first_only && !missing.empty() ? missing.front() + 1 : *universe;
  verdict.counterexamples.reserve(missing.size());
  for (Rank r : missing) {
    verdict.counterexamples.push_back(Word::unrank(r, s.n(), s.q()));
  }
  return verdict;
}

}  // namespace skirt

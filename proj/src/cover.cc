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

#include "skirt/cover.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <utility>

#include "skirt/bitset.h"
#include "skirt/error.h"
#include "skirt/verify.h"

namespace skirt {
namespace {

using Block = Bitset::Block;
using Clock = std::chrono::steady_clock;

TupleSet to_tuple_set(const CoverInstance& instance,
                      const std::vector<Rank>& ranks) {
  TupleSet set(instance.n(), instance.q());
  for (Rank r : ranks) set.insert(Word::unrank(r, instance.n(), instance.q()));
  return set;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return (a + b - 1) / b;
}

// Depth-first branch-and-bound over bit-packed coverage rows. kFixedBlocks
// is the number of 64-bit blocks per row when known at compile time, 0 for
// a runtime count.
template <std::size_t kFixedBlocks>
class BranchAndBound {
 public:
  BranchAndBound(const CoverInstance& instance, const ExactOptions& options)
      : options_(options),
        universe_(instance.universe_size()),
        blocks_(kFixedBlocks != 0
                    ? kFixedBlocks
                    : (universe_ + Bitset::kBlockBits - 1) / Bitset::kBlockBits),
        rows_(universe_ * blocks_, 0),
        residual_(universe_, 0),
        histogram_(instance.degree() + 1, 0) {
    for (Rank c = 0; c < universe_; ++c) {
      Block* row = &rows_[c * blocks_];
      for (std::uint32_t r : instance.covers(c)) {
        row[r / Bitset::kBlockBits] |= Block{1} << (r % Bitset::kBlockBits);
      }
    }
  }

  // Searches for a cover with fewer than `cutoff` words that contains
  // `forced`. Returns true if the search space was exhausted.
  bool run(std::size_t cutoff, const std::vector<Rank>& forced) {
    cutoff_ = cutoff;
    start_ = Clock::now();
    aborted_ = false;
    open_lower_ = std::numeric_limits<std::uint64_t>::max();
    // Depth never exceeds the cutoff, so nothing is reallocated mid-search.
    const std::size_t depths = cutoff + 2;
    frames_.assign(depths * 3 * blocks(), 0);
    branch_buffers_.assign(depths, {});
    Block* uncovered = frame(0, 0);
    Block* available = frame(0, 1);
    std::fill(uncovered, uncovered + blocks(), ~Block{0});
    std::fill(available, available + blocks(), ~Block{0});
    trim(uncovered);
    trim(available);
    chosen_.clear();
    for (Rank f : forced) {
      chosen_.push_back(f);
      const Block* row = &rows_[f * blocks()];
      for (std::size_t k = 0; k < blocks(); ++k) uncovered[k] &= ~row[k];
      available[f / Bitset::kBlockBits] &= ~(Block{1} << (f % Bitset::kBlockBits));
    }
    search(0);
    return !aborted_;
  }

  bool found() const { return !best_.empty(); }
  const std::vector<Rank>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t open_lower() const { return open_lower_; }

 private:
  std::size_t blocks() const {
    if constexpr (kFixedBlocks != 0) {
      return kFixedBlocks;
    } else {
      return blocks_;
    }
  }
  // Slot 0: uncovered elements, 1: available candidates, 2: scratch.
  Block* frame(std::size_t depth, int slot) {
    return &frames_[(depth * 3 + slot) * blocks()];
  }
  void trim(Block* bits) const {
    if (universe_ % Bitset::kBlockBits != 0) {
      bits[blocks() - 1] &= (Block{1} << (universe_ % Bitset::kBlockBits)) - 1;
    }
  }
  std::size_t count_and(const Block* a, const Block* b) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < blocks(); ++k) c += std::popcount(a[k] & b[k]);
    return c;
  }

  bool out_of_budget() {
    if (nodes_ >= options_.node_budget) return true;
    return (nodes_ & 1023) == 0 && Clock::now() - start_ > options_.time_budget;
  }

  void search(std::size_t depth) {
    ++nodes_;
    const Block* uncovered = frame(depth, 0);
    std::size_t remaining = 0;
    for (std::size_t k = 0; k < blocks(); ++k) remaining += std::popcount(uncovered[k]);
    if (remaining == 0) {
      if (chosen_.size() < cutoff_) {
        best_ = chosen_;
        cutoff_ = chosen_.size();
      }
      return;
    }
    if (out_of_budget()) {
      aborted_ = true;
      open_lower_ = std::min<std::uint64_t>(open_lower_, chosen_.size() + 1);
      return;
    }

    // Residual coverage of every available candidate, and the fewest words
    // whose largest residuals could still sum to `remaining`.
    const Block* available = frame(depth, 1);
    std::fill(histogram_.begin(), histogram_.end(), 0);
    for (std::size_t k = 0; k < blocks(); ++k) {
      for (Block b = available[k]; b != 0; b &= b - 1) {
        const std::size_t c = k * Bitset::kBlockBits + std::countr_zero(b);
        const std::size_t gain = count_and(&rows_[c * blocks()], uncovered);
        residual_[c] = static_cast<std::uint32_t>(gain);
        ++histogram_[gain];
      }
    }
    std::size_t needed = 0;
    std::size_t sum = 0;
    for (std::size_t g = histogram_.size() - 1; g > 0 && sum < remaining; --g) {
      for (std::size_t m = histogram_[g]; m > 0 && sum < remaining; --m) {
        sum += g;
        ++needed;
      }
    }
    if (sum < remaining) return;
    const std::size_t lower = chosen_.size() + needed;
    if (lower >= cutoff_) return;

    // Branch on the uncovered element with the fewest available coverers.
    std::size_t branch_element = 0;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t k = 0; k < blocks() && fewest > 1; ++k) {
      for (Block b = uncovered[k]; b != 0; b &= b - 1) {
        const std::size_t y = k * Bitset::kBlockBits + std::countr_zero(b);
        const std::size_t coverers = count_and(&rows_[y * blocks()], available);
        if (coverers == 0) return;
        if (coverers < fewest) {
          fewest = coverers;
          branch_element = y;
          if (fewest == 1) break;
        }
      }
    }

    std::vector<std::uint32_t>& branches = branch_buffers_[depth];
    branches.clear();
    const Block* row = &rows_[branch_element * blocks()];
    for (std::size_t k = 0; k < blocks(); ++k) {
      for (Block b = row[k] & available[k]; b != 0; b &= b - 1) {
        branches.push_back(static_cast<std::uint32_t>(
            k * Bitset::kBlockBits + std::countr_zero(b)));
      }
    }
    std::stable_sort(branches.begin(), branches.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return residual_[a] > residual_[b];
                     });

    Block* next_uncovered = frame(depth + 1, 0);
    Block* next_available = frame(depth + 1, 1);
    // Later siblings exclude earlier ones.
    Block* remaining_candidates = frame(depth, 2);
    std::copy(available, available + blocks(), remaining_candidates);
    for (std::uint32_t c : branches) {
      if (lower >= cutoff_) break;
      remaining_candidates[c / Bitset::kBlockBits] &=
          ~(Block{1} << (c % Bitset::kBlockBits));
      const Block* cover = &rows_[c * blocks()];
      for (std::size_t k = 0; k < blocks(); ++k) {
        next_uncovered[k] = uncovered[k] & ~cover[k];
        next_available[k] = remaining_candidates[k];
      }
      chosen_.push_back(c);
      search(depth + 1);
      chosen_.pop_back();
      if (aborted_) {
        open_lower_ = std::min<std::uint64_t>(open_lower_, lower);
        return;
      }
    }
  }

  const ExactOptions& options_;
  const std::uint64_t universe_;
  const std::size_t blocks_;
  std::vector<Block> rows_;
  std::vector<Block> frames_;
  std::vector<std::vector<std::uint32_t>> branch_buffers_;
  std::vector<std::uint32_t> residual_;
  std::vector<std::size_t> histogram_;
  std::vector<Rank> chosen_;
  std::vector<Rank> best_;
  std::size_t cutoff_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t open_lower_ = 0;
  bool aborted_ = false;
  Clock::time_point start_;
};

struct SearchOutcome {
  bool complete = false;
  std::vector<Rank> best;
  std::uint64_t nodes = 0;
  std::uint64_t open_lower = 0;
};

template <std::size_t kFixedBlocks>
SearchOutcome run_search(const CoverInstance& instance,
                         const ExactOptions& options, std::size_t cutoff,
                         const std::vector<Rank>& forced) {
  BranchAndBound<kFixedBlocks> search(instance, options);
  SearchOutcome outcome;
  outcome.complete = search.run(cutoff, forced);
  outcome.best = search.best();
  outcome.nodes = search.nodes();
  outcome.open_lower = search.open_lower();
  return outcome;
}

SearchOutcome dispatch_search(const CoverInstance& instance,
                              const ExactOptions& options, std::size_t cutoff,
                              const std::vector<Rank>& forced) {
  const std::uint64_t blocks =
      (instance.universe_size() + Bitset::kBlockBits - 1) / Bitset::kBlockBits;
  switch (blocks) {
    case 1: return run_search<1>(instance, options, cutoff, forced);
    case 2: return run_search<2>(instance, options, cutoff, forced);
    case 3: return run_search<3>(instance, options, cutoff, forced);
    case 4: return run_search<4>(instance, options, cutoff, forced);
    case 5: return run_search<5>(instance, options, cutoff, forced);
    case 6: return run_search<6>(instance, options, cutoff, forced);
    case 7: return run_search<7>(instance, options, cutoff, forced);
    case 8: return run_search<8>(instance, options, cutoff, forced);
    default: return run_search<0>(instance, options, cutoff, forced);
  }
}

}  // namespace

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kFeasible:
      return "feasible";
    case SolveStatus::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

CoverInstance build_cover_instance(int n, int q, const Limits& limits) {
  if (n < 1 || q < 2) throw ParameterError("need n >= 1 and q >= 2");
  const auto universe = checked_power(q, n);
  if (!universe || *universe > limits.universe_cap ||
      *universe > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceError("q^n exceeds the universe cap for a cover instance");
  }
  const std::uint64_t degree = *checked_power(q - 1, n);
  if (*universe > limits.enumeration_cap / std::max<std::uint64_t>(degree, 1)) {
    throw ResourceError("q^n * (q-1)^n exceeds the enumeration cap");
  }
  CoverInstance instance;
  instance.n_ = n;
  instance.q_ = q;
  instance.universe_size_ = *universe;
  instance.degree_ = degree;
  instance.coverage_.reserve(*universe * degree);
  for (Rank c = 0; c < *universe; ++c) {
    for_each_skirted_rank(Word::unrank(c, n, q), [&](Rank r) {
      instance.coverage_.push_back(static_cast<std::uint32_t>(r));
    });
  }
  return instance;
}

SolveResult greedy_cover(const CoverInstance& instance, std::uint64_t seed) {
  const auto start = Clock::now();
  const std::uint64_t universe = instance.universe_size();

  // priority[c]: position of c in the tie-breaking order.
  std::vector<std::uint64_t> priority(universe);
  std::iota(priority.begin(), priority.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(priority.begin(), priority.end(), rng);
  }

  std::vector<std::uint64_t> gain(universe, instance.degree());
  std::vector<bool> covered(universe, false);
  std::uint64_t uncovered = universe;
  std::vector<Rank> picked;
  while (uncovered > 0) {
    Rank best = 0;
    for (Rank c = 1; c < universe; ++c) {
      if (gain[c] > gain[best] ||
          (gain[c] == gain[best] && priority[c] < priority[best])) {
        best = c;
      }
    }
    picked.push_back(best);
    for (std::uint32_t y : instance.covers(best)) {
      if (covered[y]) continue;
      covered[y] = true;
      --uncovered;
      for (std::uint32_t c : instance.covers(y)) --gain[c];
    }
  }

  SolveResult result{.status = SolveStatus::kFeasible,
                     .best_set = to_tuple_set(instance, picked)};
  result.proven_lower = ceil_div(universe, instance.degree());
  result.nodes = picked.size();
  result.elapsed = Clock::now() - start;
  result.seed = seed;
  return result;
}

SolveResult exact_cover(const CoverInstance& instance,
                        const ExactOptions& options) {
  const auto start = Clock::now();
  const std::uint64_t universe = instance.universe_size();
  if (universe > (std::uint64_t{1} << 15)) {
    throw ResourceError("exact search keeps q^n x q^n coverage bits; q^n too large");
  }

  SolveResult incumbent = greedy_cover(instance, options.seed);
  std::vector<Rank> forced{0};
  if (options.symmetry == SymmetryBreaking::kTranslationAndNeighbor) {
    forced.push_back(Word::constant(instance.n(), instance.q(), 1).rank());
  }

  std::uint64_t proven_floor = ceil_div(universe, instance.degree());
  std::uint64_t nodes = 0;
  std::size_t cutoff = incumbent.best_set.size();
  SearchOutcome outcome;
  if (options.initial_upper && *options.initial_upper < cutoff) {
    // Look for a witness of the known bound first.
    outcome = dispatch_search(instance, options, *options.initial_upper + 1, forced);
    nodes += outcome.nodes;
    if (outcome.complete && outcome.best.empty()) {
      proven_floor =
          std::max<std::uint64_t>(proven_floor, *options.initial_upper + 1);
      outcome = dispatch_search(instance, options, cutoff, forced);
      nodes += outcome.nodes;
    }
  } else {
    outcome = dispatch_search(instance, options, cutoff, forced);
    nodes += outcome.nodes;
  }

  SolveResult result{.status = SolveStatus::kFeasible,
                     .best_set = !outcome.best.empty()
                                     ? to_tuple_set(instance, outcome.best)
                                     : std::move(incumbent.best_set)};
  const std::uint64_t size = result.best_set.size();
  if (outcome.complete) {
    result.status = SolveStatus::kOptimal;
    result.proven_lower = size;
  } else {
    result.status = SolveStatus::kBudgetExhausted;
    result.proven_lower =
        std::min(size, std::max(proven_floor, outcome.open_lower));
  }
  result.nodes = nodes;
  result.elapsed = Clock::now() - start;
  result.seed = options.seed;
  return result;
}

std::optional<int> exhaustive_oracle(int n, int q, int k_max) {
  const auto universe = checked_power(q, n);
  if (n < 1 || q < 2 || !universe || *universe > 81 || k_max < 1 || k_max > 6) {
    throw ResourceError("exhaustive oracle is limited to q^n <= 81, 1 <= k_max <= 6");
  }
  const std::size_t size = *universe;
  // mask[x]: the words x skirts, straight from the pairwise predicate.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> mask(size, {0, 0});
  for (std::size_t x = 0; x < size; ++x) {
    const Word wx = Word::unrank(x, n, q);
    for (std::size_t y = 0; y < size; ++y) {
      if (!skirts(wx, Word::unrank(y, n, q))) continue;
      if (y < 64) {
        mask[x].first |= std::uint64_t{1} << y;
      } else {
        mask[x].second |= std::uint64_t{1} << (y - 64);
      }
    }
  }
  const std::uint64_t full_lo = size >= 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << size) - 1;
  const std::uint64_t full_hi =
      size > 64 ? (std::uint64_t{1} << (size - 64)) - 1 : 0;

  // Every k-subset x_1 < ... < x_k, accumulating the union along the way.
  for (int k = 1; k <= k_max; ++k) {
    std::vector<std::size_t> pick(k);
    auto recurse = [&](auto&& self, int depth, std::size_t from,
                       std::uint64_t lo, std::uint64_t hi) -> bool {
      if (depth == k) return lo == full_lo && hi == full_hi;
      for (std::size_t x = from; x < size; ++x) {
        pick[depth] = x;
        if (self(self, depth + 1, x + 1, lo | mask[x].first,
                 hi | mask[x].second)) {
          return true;
        }
      }
      return false;
    };
    if (recurse(recurse, 0, 0, 0, 0)) return k;
  }
  return std::nullopt;
}

void emit_lp(const CoverInstance& instance, std::ostream& out) {
  const std::uint64_t universe = instance.universe_size();
  out << "\\ minimum skirting set, n=" << instance.n() << " q=" << instance.q()
      << "\n\\ x<r> = 1 iff the word of lexicographic rank r is selected\n";
  out << "Minimize\n obj:";
  for (Rank c = 0; c < universe; ++c) {
    out << (c % 16 == 0 && c > 0 ? "\n     " : "") << " + x" << c;
  }
  out << "\nSubject To\n";
  for (Rank y = 0; y < universe; ++y) {
    out << " c" << y << ":";
    std::size_t term = 0;
    for (std::uint32_t c : instance.covers(y)) {
      out << (term > 0 && term % 16 == 0 ? "\n     " : "") << " + x" << c;
      ++term;
    }
    out << " >= 1\n";
  }
  out << "Binary\n";
  for (Rank c = 0; c < universe; ++c) {
    out << " x" << c
        << (c % 16 == 15 || c + 1 == universe ? "\n" : "");
  }
  out << "End\n";
  if (!out) throw IoError("failed writing LP model");
}

}  // namespace skirt

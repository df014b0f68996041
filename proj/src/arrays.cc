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

#include "skirt/arrays.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "skirt/bitset.h"
#include "skirt/constructions.h"
#include "skirt/error.h"
#include "skirt/verify.h"

namespace skirt {
namespace {

// Advances an ascending t-subset of {0..n-1} to its colex successor.
bool next_colex(std::vector<int>& subset, int n) {
  const int t = static_cast<int>(subset.size());
  for (int j = 0; j < t; ++j) {
    const int limit = j + 1 < t ? subset[j + 1] : n;
    if (subset[j] + 1 < limit) {
      ++subset[j];
      for (int i = 0; i < j; ++i) subset[i] = i;
      return true;
    }
  }
  return false;
}

std::vector<int> first_subset(int t) {
  std::vector<int> subset(t);
  for (int i = 0; i < t; ++i) subset[i] = i;
  return subset;
}

// C(n,t) * q^t, or throw when it exceeds the work cap.
std::uint64_t check_work(int n, int t, int q, const Limits& limits) {
  if (t < 1 || t > n) {
    throw ParameterError("strength must satisfy 1 <= t <= n, got t=" +
                         std::to_string(t) + " n=" + std::to_string(n));
  }
  const BigInt work = binomial(n, t) * big_pow(q, t);
  if (work > limits.work_cap) {
    throw ResourceError("C(n,t) * q^t = " + work.str() + " exceeds the work cap");
  }
  return work.convert_to<std::uint64_t>();
}

Word restrict(const Word& row, const std::vector<int>& columns) {
  std::vector<Symbol> symbols(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) symbols[j] = row[columns[j]];
  return Word(row.q(), std::move(symbols));
}

std::uint64_t first_unset(const Bitset& bits) {
  const auto& blocks = bits.blocks();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Bitset::Block missing = ~blocks[k];
    if (missing != 0) {
      const std::uint64_t i = k * Bitset::kBlockBits + std::countr_zero(missing);
      return std::min<std::uint64_t>(i, bits.size());
    }
  }
  return bits.size();
}

enum class Check { kSkirting, kCovering };

// Runs the per-subset occupancy check; on failure fills the verdict with the
// first (subset, tuple) in colex / lexicographic order.
StrengthVerdict check_strength(const SkirtArray& array, int t, Check check,
                               const Limits& limits) {
  check_work(array.n(), t, array.q(), limits);
  const std::uint64_t tuples = *checked_power(array.q(), t);
  Bitset seen(tuples);
  std::vector<int> columns = first_subset(t);
  do {
    seen.clear();
    for (const Word& row : array.rows()) {
      const Word restricted = restrict(row, columns);
      if (check == Check::kSkirting) {
        for_each_skirted_rank(restricted, [&](Rank r) { seen.set(r); });
      } else {
        seen.set(restricted.rank());
      }
    }
    const std::uint64_t missing = first_unset(seen);
    if (missing < tuples) {
      return StrengthVerdict{.holds = false,
                             .failing_columns = columns,
                             .failing_tuple = Word::unrank(missing, t, array.q())};
    }
  } while (next_colex(columns, array.n()));
  return StrengthVerdict{.holds = true};
}

}  // namespace

SkirtArray::SkirtArray(int n, int q, std::vector<Word> rows)
    : n_(n), q_(q), rows_(std::move(rows)) {
  if (n_ < 1 || q_ < 2) throw ParameterError("array needs n >= 1 and q >= 2");
  if (rows_.empty()) throw ParameterError("array needs at least one row");
  for (const Word& row : rows_) {
    if (row.n() != n_ || row.q() != q_) {
      throw DimensionMismatch("array row does not match (n=" + std::to_string(n_) +
                              ", q=" + std::to_string(q_) + ")");
    }
  }
}

StrengthVerdict verify_array_strength(SkirtArray& array, int t,
                                      const Limits& limits) {
  StrengthVerdict verdict = check_strength(array, t, Check::kSkirting, limits);
  if (verdict.holds) {
    array.certified_strength_ = std::max(array.certified_strength_.value_or(0), t);
  }
  return verdict;
}

StrengthVerdict verify_covering_array(SkirtArray& array, int t,
                                      const Limits& limits) {
  StrengthVerdict verdict = check_strength(array, t, Check::kCovering, limits);
  if (verdict.holds) {
    array.certified_covering_strength_ =
        std::max(array.certified_covering_strength_.value_or(0), t);
  }
  return verdict;
}

SkirtArray ca_to_sa(const SkirtArray& covering_array) {
  const auto t = covering_array.certified_covering_strength();
  if (!t) throw ParameterError("input is not certified as a covering array");
  const BigInt dropped = big_pow(covering_array.q() - 1, *t) - 1;
  if (dropped >= covering_array.num_rows()) {
    throw ParameterError("covering array has " +
                         std::to_string(covering_array.num_rows()) +
                         " rows; need more than (q-1)^t - 1 = " + dropped.str());
  }
  const auto skip = dropped.convert_to<std::size_t>();
  SkirtArray out(covering_array.n(), covering_array.q(),
                 {covering_array.rows().begin() + skip, covering_array.rows().end()});
  if (!verify_array_strength(out, *t).holds) {
    throw Error("row deletion lost skirting strength " + std::to_string(*t));
  }
  return out;
}

std::uint64_t skirting_deficiency(const SkirtArray& array, int t) {
  const Limits limits = Limits::FromEnvironment();
  check_work(array.n(), t, array.q(), limits);
  const std::uint64_t tuples = *checked_power(array.q(), t);
  Bitset seen(tuples);
  std::uint64_t deficiency = 0;
  std::vector<int> columns = first_subset(t);
  do {
    seen.clear();
    for (const Word& row : array.rows()) {
      for_each_skirted_rank(restrict(row, columns), [&](Rank r) { seen.set(r); });
    }
    deficiency += tuples - seen.count();
  } while (next_colex(columns, array.n()));
  return deficiency;
}

BoundRecord derive_f_bound(const SkirtArray& array, int t, int q_target,
                           const Limits& limits) {
  if (array.certified_strength().value_or(0) < t) {
    throw ParameterError("array is not certified with strength " + std::to_string(t));
  }
  ConstructionReport report = from_skirting_array(array, t, q_target);
  BoundRecord record{.n = array.n(),
                     .q = q_target,
                     .kind = BoundKind::kUpper,
                     .value = report.set.size(),
                     .rule = "skirting-array",
                     .trust = Trust::kDerived};
  const auto universe = checked_power(q_target, array.n());
  if (universe && *universe <= limits.universe_cap) {
    VerifyOptions options;
    options.limits = limits;
    if (!verify_skirting_set(report.set, options).is_skirting) {
      throw Error("set built from a certified skirting array failed verification");
    }
    record.trust = Trust::kVerifiedWitness;
    record.witness = std::make_shared<const TupleSet>(std::move(report.set));
  }
  return record;
}

namespace {

// Incremental deficiency bookkeeping for local search: per column subset T
// and tuple y, the number of rows skirting y on T, and the uncovered pairs
// as an indexable list.
class SearchState {
 public:
  SearchState(int t, int n, int q, int rows, std::mt19937_64& rng)
      : t_(t), n_(n), q_(q), rows_(rows), rng_(rng), cells_(rows * n) {
    tuples_ = *checked_power(q, t);
    std::vector<int> columns = first_subset(t);
    do {
      subsets_.push_back(columns);
    } while (next_colex(columns, n));
    containing_.assign(n, {});
    for (std::size_t s = 0; s < subsets_.size(); ++s) {
      for (int j = 0; j < t; ++j) containing_[subsets_[s][j]].emplace_back(s, j);
    }
    weight_.assign(t, 1);
    for (int j = t - 2; j >= 0; --j) weight_[j] = weight_[j + 1] * q;
    counts_.assign(subsets_.size() * tuples_, 0);
    position_.assign(subsets_.size() * tuples_, kAbsent);
  }

  void randomize() {
    std::uniform_int_distribution<int> symbol(0, q_ - 1);
    for (auto& cell : cells_) cell = static_cast<Symbol>(symbol(rng_));
    std::fill(counts_.begin(), counts_.end(), 0);
    for (std::size_t s = 0; s < subsets_.size(); ++s) {
      for (int r = 0; r < rows_; ++r) {
        for_each_skirted_rank(restricted(r, s), [&](Rank y) { ++counts_[s * tuples_ + y]; });
      }
    }
    std::fill(position_.begin(), position_.end(), kAbsent);
    uncovered_.clear();
    for (std::uint64_t p = 0; p < counts_.size(); ++p) {
      if (counts_[p] == 0) add_uncovered(p);
    }
  }

  std::uint64_t deficiency() const { return uncovered_.size(); }

  // Change in deficiency if cell (r, c) took `symbol`.
  std::int64_t delta(int r, int c, Symbol symbol) const {
    std::int64_t d = 0;
    visit_changes(r, c, symbol, [&](std::uint64_t lost, std::uint64_t gained) {
      d += counts_[lost] == 1;
      d -= counts_[gained] == 0;
    });
    return d;
  }

  void apply(int r, int c, Symbol symbol) {
    visit_changes(r, c, symbol, [&](std::uint64_t lost, std::uint64_t gained) {
      if (--counts_[lost] == 0) add_uncovered(lost);
      if (counts_[gained]++ == 0) remove_uncovered(gained);
    });
    cells_[r * n_ + c] = symbol;
  }

  // A uniformly random uncovered (subset, tuple) pair.
  std::pair<std::size_t, Rank> random_uncovered() {
    std::uniform_int_distribution<std::size_t> pick(0, uncovered_.size() - 1);
    const std::uint64_t p = uncovered_[pick(rng_)];
    return {p / tuples_, p % tuples_};
  }

  const std::vector<int>& subset(std::size_t s) const { return subsets_[s]; }
  Symbol cell(int r, int c) const { return cells_[r * n_ + c]; }

  SkirtArray to_array() const {
    std::vector<Word> rows;
    for (int r = 0; r < rows_; ++r) {
      rows.emplace_back(q_, std::vector<Symbol>(cells_.begin() + r * n_,
                                                cells_.begin() + (r + 1) * n_));
    }
    return SkirtArray(n_, q_, std::move(rows));
  }

 private:
  static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};

  Word restricted(int r, std::size_t s) const {
    std::vector<Symbol> symbols(t_);
    for (int j = 0; j < t_; ++j) symbols[j] = cells_[r * n_ + subsets_[s][j]];
    return Word(q_, std::move(symbols));
  }

  // For every subset T containing c: pairs (T, y) row r stops skirting and
  // the matching pairs it starts skirting when cell (r, c) becomes `symbol`.
  template <typename F>
  void visit_changes(int r, int c, Symbol symbol, F&& f) const {
    const Symbol old = cells_[r * n_ + c];
    if (old == symbol) return;
    for (const auto& [s, j] : containing_[c]) {
      const Rank w = weight_[j];
      const std::uint64_t base = s * tuples_;
      for_each_skirted_rank(restricted(r, s), [&](Rank y) {
        if ((y / w) % q_ != symbol) return;
        f(base + y, base + y - symbol * w + old * w);
      });
    }
  }

  void add_uncovered(std::uint64_t p) {
    position_[p] = static_cast<std::uint32_t>(uncovered_.size());
    uncovered_.push_back(p);
  }
  void remove_uncovered(std::uint64_t p) {
    const std::uint32_t i = position_[p];
    uncovered_[i] = uncovered_.back();
    position_[uncovered_[i]] = i;
    uncovered_.pop_back();
    position_[p] = kAbsent;
  }

  int t_, n_, q_, rows_;
  std::mt19937_64& rng_;
  std::vector<Symbol> cells_;
  std::uint64_t tuples_ = 0;
  std::vector<std::vector<int>> subsets_;
  std::vector<std::vector<std::pair<std::size_t, int>>> containing_;
  std::vector<Rank> weight_;
  std::vector<std::uint16_t> counts_;
  std::vector<std::uint32_t> position_;
  std::vector<std::uint64_t> uncovered_;
};

}  // namespace

std::optional<SkirtArray> local_search_sa(const LocalSearchOptions& o) {
  if (o.rows < 1 || o.n < 1 || o.q < 2 || o.t < 1 || o.t > o.n) return std::nullopt;
  if (o.rows > 65535) throw ParameterError("local search supports at most 65535 rows");
  const std::uint64_t work = check_work(o.n, o.t, o.q, o.limits);
  if (work > std::uint64_t{1} << 31) {
    throw ResourceError("local search state would exceed 2^31 pairs");
  }

  std::mt19937_64 rng(o.seed);
  SearchState state(o.t, o.n, o.q, o.rows, rng);
  state.randomize();
  std::uint64_t best = state.deficiency();
  std::uint64_t since_best = 0;
  // Last step each cell changed, for a short tabu tenure.
  std::vector<std::uint64_t> changed_at(static_cast<std::size_t>(o.rows) * o.n, 0);
  const std::uint64_t tenure = 1 + static_cast<std::uint64_t>(o.n) / 4;
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  struct Move {
    int r, c;
    Symbol symbol;
  };
  std::vector<Move> candidates;
  for (std::uint64_t step = 1; step <= o.iterations && state.deficiency() > 0; ++step) {
    const auto [s, y] = state.random_uncovered();
    const std::vector<int>& columns = state.subset(s);
    const Word target = Word::unrank(y, o.t, o.q);

    // Cells whose change lets a row skirt the chosen pair: rows blocked by a
    // single agreeing coordinate, else all blocking cells of the least
    // blocked rows.
    candidates.clear();
    int fewest = o.t + 1;
    for (int r = 0; r < o.rows; ++r) {
      int blockers = 0;
      for (int j = 0; j < o.t; ++j) blockers += state.cell(r, columns[j]) == target[j];
      if (blockers > fewest) continue;
      if (blockers < fewest) {
        fewest = blockers;
        candidates.clear();
      }
      for (int j = 0; j < o.t; ++j) {
        if (state.cell(r, columns[j]) != target[j]) continue;
        for (int sym = 0; sym < o.q; ++sym) {
          if (sym != target[j]) {
            candidates.push_back({r, columns[j], static_cast<Symbol>(sym)});
          }
        }
      }
    }

    std::int64_t best_delta = 0;
    std::vector<Move> best_moves;
    for (const Move& m : candidates) {
      const std::int64_t d = state.delta(m.r, m.c, m.symbol);
      const bool tabu = step - changed_at[m.r * o.n + m.c] <= tenure &&
                        changed_at[m.r * o.n + m.c] != 0;
      const bool aspires = static_cast<std::int64_t>(state.deficiency()) + d <
                           static_cast<std::int64_t>(best);
      if (tabu && !aspires) continue;
      if (best_moves.empty() || d < best_delta) {
        best_delta = d;
        best_moves.assign(1, m);
      } else if (d == best_delta) {
        best_moves.push_back(m);
      }
    }
    if (best_moves.empty() || (best_delta > 0 && unit(rng) < 0.1)) {
      if (candidates.empty()) continue;
      best_moves.assign(1, candidates[std::uniform_int_distribution<std::size_t>(
                               0, candidates.size() - 1)(rng)]);
    }
    const Move m = best_moves[std::uniform_int_distribution<std::size_t>(
        0, best_moves.size() - 1)(rng)];
    state.apply(m.r, m.c, m.symbol);
    changed_at[m.r * o.n + m.c] = step;

    if (state.deficiency() < best) {
      best = state.deficiency();
      since_best = 0;
    } else if (++since_best >= o.plateau) {
      state.randomize();
      best = state.deficiency();
      since_best = 0;
      std::fill(changed_at.begin(), changed_at.end(), 0);
    }
  }
  if (state.deficiency() > 0) return std::nullopt;

  SkirtArray found = state.to_array();
  if (!verify_array_strength(found, o.t, o.limits).holds) {
    throw Error("local search reached zero deficiency on an array that fails verification");
  }
  return found;
}

}  // namespace skirt

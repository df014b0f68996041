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

#include <cstddef>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "skirt/bigint.h"
#include "skirt/word.h"

namespace skirt {

// ceil(q^n / (q-1)^n): every word skirts exactly (q-1)^n words.
BigInt sphere_lower(int n, int q);

// floor(e^(n/q)) + 1, the integer form of f(n,q) > e^(n/q). Always dominated
// by sphere_lower since ln(q/(q-1)) > 1/q; kept for completeness.
BigInt alon_lower(int n, int q);

// n+1 when n < q, 2^n when q == 2, nullopt otherwise.
std::optional<BigInt> closed_form(int n, int q);

enum class BoundKind { kLower, kUpper, kExact };

// Ordered from strongest to weakest. kDerived and kVerifiedWitness carry
// the same force; anything depending on an assumed fact is assumed.
enum class Trust { kDerived, kVerifiedWitness, kAssumedExternal };

std::string to_string(BoundKind kind);
std::string to_string(Trust trust);
std::optional<BoundKind> parse_bound_kind(const std::string& text);
std::optional<Trust> parse_trust(const std::string& text);

// kAssumedExternal if either side is. Otherwise the shared label, or
// kDerived when they differ: a bound computed from a witness is derived.
Trust weakest(Trust a, Trust b);

struct BoundRecord {
  int n = 0;
  int q = 0;
  BoundKind kind = BoundKind::kUpper;
  BigInt value = 1;
  std::string rule;
  Trust trust = Trust::kDerived;
  // Indices of the ledger records this one was derived from.
  std::vector<std::size_t> inputs;
  // The verified set behind a kVerifiedWitness record, when it is at hand.
  std::shared_ptr<const TupleSet> witness;
};

// Propagation window, 1 <= n <= n_max and 2 <= q <= q_max.
struct Window {
  int n_max = 32;
  int q_max = 32;
};

// Provenance-tagged bounds on f(n,q). Invariant: for every (n,q), the best
// lower value never exceeds the best upper value.
class Ledger {
 public:
  explicit Ledger(Window window = {});

  const Window& window() const { return window_; }
  const std::vector<BoundRecord>& records() const { return records_; }

  // Inserts `record` and returns its index. Throws InconsistencyError (and
  // leaves the ledger unchanged) when it would make lower > upper, and
  // ParameterError for malformed records or dangling inputs.
  std::size_t register_fact(BoundRecord record);

  // Verifies `set` and registers upper(n,q) = |set| with trust
  // kVerifiedWitness. Throws ParameterError if the set is not skirting.
  std::size_t register_witness(const TupleSet& set, const std::string& rule);

  // Index of the record attaining the best lower / upper bound for (n, q).
  std::optional<std::size_t> best_lower(int n, int q) const;
  std::optional<std::size_t> best_upper(int n, int q) const;

  // Best bound values; lower defaults to 1 and upper to nullopt.
  BigInt lower_value(int n, int q) const;
  std::optional<BigInt> upper_value(int n, int q) const;

  // "rule(n,q)=value[trust] <- ..." back to the roots.
  std::string chain(std::size_t index) const;

  // One record per line: n q kind value rule trust inputs.
  void save(std::ostream& out) const;
  static Ledger load(std::istream& in, Window window = {});

 private:
  struct Best {
    std::optional<std::size_t> lower;
    std::optional<std::size_t> upper;
  };
  Best best_of(int n, int q) const;
  Best scan_best(int n, int q) const;
  void index_last();
  bool better_lower(const BoundRecord& a, const BoundRecord& b) const;
  bool better_upper(const BoundRecord& a, const BoundRecord& b) const;

  Window window_;
  std::vector<BoundRecord> records_;
  std::map<std::pair<int, int>, Best> best_;
};

struct PropagateOptions {
  // Apply the strict-increase, product and alphabet-embedding rules. When
  // false only the per-cell formulas (sphere, alon, closed form) are added.
  bool inter_parameter = true;
};

// Closes the ledger under the bound rules over its window:
//   lower(n,q) >= max(sphere, alon, closed form)
//   upper(n,q) <= closed form when exact
//   lower(n,q) >= lower(n-1,q) + 1
//   upper(n+m,q) <= upper(n,q) * upper(m,q)
//   upper(n,q+1) <= upper(n,q)
// A record is added only when it tightens a bound (or strengthens its trust
// at equal value), so a second call adds nothing.
void propagate(Ledger& ledger, const PropagateOptions& options = {});

struct CqBounds {
  int q = 0;
  // q/(q-1)
  double lower = 0.0;
  std::string lower_expression;
  // min(q^(1/(q-1)), min_n upper(n,q)^(1/n))
  double upper = 0.0;
  std::string upper_expression;
  int witness_n = 0;
  BigInt witness_value;
  Trust trust = Trust::kDerived;
  std::string rule;
  // Natural-log images, the bounds on L_q = ln C_q.
  double log_lower = 0.0;
  double log_upper = 0.0;
};

// Bounds on C_q = inf_n f(n,q)^(1/n) from the ledger's upper bounds. The
// comparison between candidates u^(1/n) is exact; ties go to the smaller n.
CqBounds cq_bounds(int q, const Ledger& ledger);

enum class TableFormat { kText, kCsv };

// Exact value or [lower,upper] per (n, q), with rule and trust per cell.
std::string render_table(const std::vector<int>& q_list, int n_max,
                         const Ledger& ledger, TableFormat format);

}  // namespace skirt

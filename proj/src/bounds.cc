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

#include "skirt/bounds.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <utility>

#include "skirt/error.h"
#include "skirt/verify.h"

namespace skirt {
namespace {

constexpr int kChainDepth = 8;

int strength(Trust t) { return t == Trust::kAssumedExternal ? 1 : 0; }

bool has_lower(const BoundRecord& r) { return r.kind != BoundKind::kUpper; }
bool has_upper(const BoundRecord& r) { return r.kind != BoundKind::kLower; }

std::string key_string(int n, int q) {
  return "(" + std::to_string(n) + "," + std::to_string(q) + ")";
}

// u^(1/n) as a double, through logarithms so large u stay finite.
double nth_root(const BigInt& u, int n) {
  return std::exp(std::log(u.convert_to<double>()) / n);
}

}  // namespace

BigInt sphere_lower(int n, int q) {
  if (n < 1 || q < 2) throw ParameterError("sphere bound needs n >= 1, q >= 2");
  const BigInt num = big_pow(q, n);
  const BigInt den = big_pow(q - 1, n);
  return (num + den - 1) / den;
}

BigInt alon_lower(int n, int q) {
  if (n < 1 || q < 2) throw ParameterError("alon bound needs n >= 1, q >= 2");
  const long double x =
      std::floor(std::exp(static_cast<long double>(n) / static_cast<long double>(q)));
  if (x < 9.2e18L) return BigInt(static_cast<std::uint64_t>(x)) + 1;
  int exponent = 0;
  const long double mantissa = std::frexp(x, &exponent);
  BigInt value(static_cast<std::uint64_t>(std::ldexp(mantissa, 63)));
  value <<= (exponent - 63);
  return value + 1;
}

std::optional<BigInt> closed_form(int n, int q) {
  if (n < 1 || q < 2) return std::nullopt;
  if (q == 2) return big_pow(2, n);
  if (n < q) return BigInt(n + 1);
  return std::nullopt;
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kLower:
      return "lower";
    case BoundKind::kUpper:
      return "upper";
    case BoundKind::kExact:
      return "exact";
  }
  return "?";
}

std::string to_string(Trust trust) {
  switch (trust) {
    case Trust::kDerived:
      return "derived";
    case Trust::kVerifiedWitness:
      return "verified-witness";
    case Trust::kAssumedExternal:
      return "assumed-external";
  }
  return "?";
}

std::optional<BoundKind> parse_bound_kind(const std::string& text) {
  if (text == "lower") return BoundKind::kLower;
  if (text == "upper") return BoundKind::kUpper;
  if (text == "exact") return BoundKind::kExact;
  return std::nullopt;
}

std::optional<Trust> parse_trust(const std::string& text) {
  if (text == "derived") return Trust::kDerived;
  if (text == "verified-witness") return Trust::kVerifiedWitness;
  if (text == "assumed-external") return Trust::kAssumedExternal;
  return std::nullopt;
}

Trust weakest(Trust a, Trust b) {
  if (a == Trust::kAssumedExternal || b == Trust::kAssumedExternal) {
    return Trust::kAssumedExternal;
  }
  return a == b ? a : Trust::kDerived;
}

Ledger::Ledger(Window window) : window_(window) {
  if (window_.n_max < 1 || window_.q_max < 2) {
    throw ParameterError("ledger window needs n_max >= 1 and q_max >= 2");
  }
}

bool Ledger::better_lower(const BoundRecord& a, const BoundRecord& b) const {
  if (a.value != b.value) return a.value > b.value;
  return strength(a.trust) < strength(b.trust);
}

bool Ledger::better_upper(const BoundRecord& a, const BoundRecord& b) const {
  if (a.value != b.value) return a.value < b.value;
  return strength(a.trust) < strength(b.trust);
}

Ledger::Best Ledger::best_of(int n, int q) const {
  const auto it = best_.find({n, q});
  return it == best_.end() ? Best{} : it->second;
}

void Ledger::index_last() {
  const std::size_t i = records_.size() - 1;
  const BoundRecord& r = records_[i];
  Best& best = best_[{r.n, r.q}];
  if (has_lower(r) && (!best.lower || better_lower(r, records_[*best.lower]))) {
    best.lower = i;
  }
  if (has_upper(r) && (!best.upper || better_upper(r, records_[*best.upper]))) {
    best.upper = i;
  }
}

Ledger::Best Ledger::scan_best(int n, int q) const {
  Best best;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const BoundRecord& r = records_[i];
    if (r.n != n || r.q != q) continue;
    if (has_lower(r) && (!best.lower || better_lower(r, records_[*best.lower]))) {
      best.lower = i;
    }
    if (has_upper(r) && (!best.upper || better_upper(r, records_[*best.upper]))) {
      best.upper = i;
    }
  }
  return best;
}

std::optional<std::size_t> Ledger::best_lower(int n, int q) const {
  return best_of(n, q).lower;
}

std::optional<std::size_t> Ledger::best_upper(int n, int q) const {
  return best_of(n, q).upper;
}

BigInt Ledger::lower_value(int n, int q) const {
  const auto i = best_lower(n, q);
  return i ? records_[*i].value : BigInt(1);
}

std::optional<BigInt> Ledger::upper_value(int n, int q) const {
  const auto i = best_upper(n, q);
  if (!i) return std::nullopt;
  return records_[*i].value;
}

std::size_t Ledger::register_fact(BoundRecord record) {
  if (record.n < 1 || record.q < 2) {
    throw ParameterError("bound record needs n >= 1 and q >= 2");
  }
  if (record.value < 1) throw ParameterError("bound values are at least 1");
  if (record.rule.empty() ||
      record.rule.find_first_of(" \t\n") != std::string::npos) {
    throw ParameterError("rule identifiers are non-empty and contain no spaces");
  }
  for (std::size_t input : record.inputs) {
    if (input >= records_.size()) {
      throw ParameterError("bound record cites unknown input " +
                           std::to_string(input));
    }
    record.trust = weakest(record.trust, records_[input].trust);
  }
  if (record.trust == Trust::kVerifiedWitness) {
    if (!record.witness) {
      throw ParameterError("verified-witness records need their witness set");
    }
    const TupleSet& w = *record.witness;
    if (w.n() != record.n || w.q() != record.q || record.value != w.size() ||
        record.kind != BoundKind::kUpper) {
      throw ParameterError("witness set does not match its bound record");
    }
    if (!verify_skirting_set(w).is_skirting) {
      throw ParameterError("witness set for " + key_string(record.n, record.q) +
                           " is not a skirting set");
    }
  }

  records_.push_back(std::move(record));
  index_last();
  const BoundRecord& added = records_.back();
  const Best best = best_of(added.n, added.q);
  if (best.lower && best.upper &&
      records_[*best.lower].value > records_[*best.upper].value) {
    const std::string message =
        "inconsistent bounds for f" + key_string(added.n, added.q) +
        ": lower " + chain(*best.lower) + " exceeds upper " + chain(*best.upper);
    const std::pair<int, int> key{added.n, added.q};
    records_.pop_back();
    best_[key] = scan_best(key.first, key.second);
    throw InconsistencyError(message);
  }
  return records_.size() - 1;
}

std::size_t Ledger::register_witness(const TupleSet& set, const std::string& rule) {
  if (!verify_skirting_set(set).is_skirting) {
    throw ParameterError("witness '" + rule + "' is not a skirting set");
  }
  BoundRecord record{.n = set.n(),
                     .q = set.q(),
                     .kind = BoundKind::kUpper,
                     .value = set.size(),
                     .rule = rule,
                     .trust = Trust::kVerifiedWitness,
                     .witness = std::make_shared<const TupleSet>(set)};
  return register_fact(std::move(record));
}

std::string Ledger::chain(std::size_t index) const {
  auto render = [&](auto&& self, std::size_t i, int depth) -> std::string {
    const BoundRecord& r = records_[i];
    std::string out = r.rule + key_string(r.n, r.q) + " " + to_string(r.kind) +
                      "=" + r.value.str() + " [" + to_string(r.trust) + "]";
    if (r.inputs.empty()) return out;
    if (depth >= kChainDepth) return out + " <- ...";
    out += " <- (";
    for (std::size_t k = 0; k < r.inputs.size(); ++k) {
      if (k > 0) out += "; ";
      out += self(self, r.inputs[k], depth + 1);
    }
    return out + ")";
  };
  return render(render, index, 0);
}

void Ledger::save(std::ostream& out) const {
  for (const BoundRecord& r : records_) {
    out << r.n << ' ' << r.q << ' ' << to_string(r.kind) << ' ' << r.value
        << ' ' << r.rule << ' ' << to_string(r.trust) << ' ';
    if (r.inputs.empty()) {
      out << '-';
    } else {
      for (std::size_t k = 0; k < r.inputs.size(); ++k) {
        out << (k > 0 ? "," : "") << r.inputs[k];
      }
    }
    out << '\n';
  }
  if (!out) throw IoError("failed writing ledger");
}

Ledger Ledger::load(std::istream& in, Window window) {
  Ledger ledger(window);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    BoundRecord r;
    std::string kind, value, trust, inputs;
    if (!(fields >> r.n >> r.q >> kind >> value >> r.rule >> trust >> inputs)) {
      throw IoError("ledger line " + std::to_string(line_number) + " is malformed");
    }
    const auto parsed_kind = parse_bound_kind(kind);
    const auto parsed_trust = parse_trust(trust);
    if (!parsed_kind || !parsed_trust ||
        value.find_first_not_of("0123456789") != std::string::npos) {
      throw IoError("ledger line " + std::to_string(line_number) + " is malformed");
    }
    r.kind = *parsed_kind;
    r.value = BigInt(value);
    r.trust = *parsed_trust;
    if (inputs != "-") {
      std::istringstream list(inputs);
      std::string item;
      while (std::getline(list, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
          throw IoError("ledger line " + std::to_string(line_number) +
                        " has a malformed input list");
        }
        r.inputs.push_back(std::stoull(item));
      }
    }
    // Witness sets are not persisted; their verification happened when the
    // record was first registered.
    for (std::size_t input : r.inputs) {
      if (input >= ledger.records_.size()) {
        throw IoError("ledger line " + std::to_string(line_number) +
                      " cites a later record");
      }
    }
    ledger.records_.push_back(std::move(r));
    ledger.index_last();
    const BoundRecord& added = ledger.records_.back();
    const Best best = ledger.best_of(added.n, added.q);
    if (best.lower && best.upper &&
        ledger.records_[*best.lower].value > ledger.records_[*best.upper].value) {
      throw InconsistencyError("ledger file is inconsistent at line " +
                               std::to_string(line_number));
    }
  }
  return ledger;
}

void propagate(Ledger& ledger, const PropagateOptions& options) {
  const Window& w = ledger.window();

  // Adds a record when it tightens the current best (or matches it with a
  // stronger trust). Returns true if something was added.
  auto offer = [&](int n, int q, BoundKind kind, const BigInt& value,
                   const std::string& rule, std::vector<std::size_t> inputs) {
    Trust trust = Trust::kDerived;
    for (std::size_t i : inputs) trust = weakest(trust, ledger.records()[i].trust);
    bool improves = false;
    if (kind != BoundKind::kUpper) {
      const auto cur = ledger.best_lower(n, q);
      improves |= !cur || value > ledger.records()[*cur].value ||
                  (value == ledger.records()[*cur].value &&
                   strength(trust) < strength(ledger.records()[*cur].trust));
    }
    if (kind != BoundKind::kLower) {
      const auto cur = ledger.best_upper(n, q);
      improves |= !cur || value < ledger.records()[*cur].value ||
                  (value == ledger.records()[*cur].value &&
                   strength(trust) < strength(ledger.records()[*cur].trust));
    }
    if (!improves) return false;
    ledger.register_fact(BoundRecord{.n = n,
                                     .q = q,
                                     .kind = kind,
                                     .value = value,
                                     .rule = rule,
                                     .trust = trust,
                                     .inputs = std::move(inputs)});
    return true;
  };

  for (int q = 2; q <= w.q_max; ++q) {
    for (int n = 1; n <= w.n_max; ++n) {
      if (auto exact = closed_form(n, q)) {
        offer(n, q, BoundKind::kExact, *exact, "closed-form", {});
      }
      offer(n, q, BoundKind::kLower, sphere_lower(n, q), "sphere", {});
      offer(n, q, BoundKind::kLower, alon_lower(n, q), "alon", {});
    }
  }
  if (!options.inter_parameter) return;

  bool changed = true;
  while (changed) {
    changed = false;
    for (int q = 2; q <= w.q_max; ++q) {
      for (int n = 1; n <= w.n_max; ++n) {
        if (n >= 2) {
          if (auto prev = ledger.best_lower(n - 1, q)) {
            changed |= offer(n, q, BoundKind::kLower,
                             ledger.records()[*prev].value + 1, "strict-increase",
                             {*prev});
          }
        }
        std::optional<std::pair<std::size_t, std::size_t>> split;
        BigInt product;
        for (int a = 1; a <= n / 2; ++a) {
          const auto left = ledger.best_upper(a, q);
          const auto right = ledger.best_upper(n - a, q);
          if (!left || !right) continue;
          const BigInt value =
              ledger.records()[*left].value * ledger.records()[*right].value;
          if (!split || value < product) {
            split = {*left, *right};
            product = value;
          }
        }
        if (split) {
          changed |= offer(n, q, BoundKind::kUpper, product, "product",
                           {split->first, split->second});
        }
        if (q >= 3) {
          if (auto smaller = ledger.best_upper(n, q - 1)) {
            changed |= offer(n, q, BoundKind::kUpper,
                             ledger.records()[*smaller].value,
                             "alphabet-embedding", {*smaller});
          }
        }
      }
    }
  }
}

CqBounds cq_bounds(int q, const Ledger& ledger) {
  if (q < 2) throw ParameterError("C_q needs q >= 2");
  CqBounds out;
  out.q = q;
  out.lower = static_cast<double>(q) / (q - 1);
  out.lower_expression = std::to_string(q) + "/" + std::to_string(q - 1);

  // f(q-1, q) = q always gives C_q <= q^(1/(q-1)).
  out.witness_n = q - 1;
  out.witness_value = q;
  out.trust = Trust::kDerived;
  out.rule = "closed-form";
  auto consider = [&](int n, const BoundRecord& r) {
    // r.value^(1/n) < current^(1/witness_n)  <=>  value^witness_n < current^n
    const BigInt lhs = big_pow(r.value, out.witness_n);
    const BigInt rhs = big_pow(out.witness_value, n);
    const bool better =
        lhs < rhs || (lhs == rhs && (n < out.witness_n ||
                                     (n == out.witness_n &&
                                      strength(r.trust) < strength(out.trust))));
    if (better) {
      out.witness_n = n;
      out.witness_value = r.value;
      out.trust = r.trust;
      out.rule = r.rule;
    }
  };
  int n_max = ledger.window().n_max;
  for (const BoundRecord& r : ledger.records()) n_max = std::max(n_max, r.n);
  for (int n = 1; n <= n_max; ++n) {
    if (auto i = ledger.best_upper(n, q)) consider(n, ledger.records()[*i]);
  }
  out.upper = nth_root(out.witness_value, out.witness_n);
  out.upper_expression = out.witness_value.str() + "^(1/" +
                         std::to_string(out.witness_n) + ")";
  out.log_lower = std::log(out.lower);
  out.log_upper = std::log(out.witness_value.convert_to<double>()) / out.witness_n;
  return out;
}

std::string render_table(const std::vector<int>& q_list, int n_max,
                         const Ledger& ledger, TableFormat format) {
  struct Cell {
    int n, q;
    BigInt lower;
    std::optional<BigInt> upper;
    std::string lower_rule, upper_rule;
    Trust trust;
  };
  std::vector<Cell> cells;
  for (int q : q_list) {
    for (int n = 1; n <= n_max; ++n) {
      Cell c{.n = n, .q = q, .lower = 1, .lower_rule = "-", .upper_rule = "-",
             .trust = Trust::kDerived};
      if (auto i = ledger.best_lower(n, q)) {
        c.lower = ledger.records()[*i].value;
        c.lower_rule = ledger.records()[*i].rule;
        c.trust = weakest(c.trust, ledger.records()[*i].trust);
      }
      if (auto i = ledger.best_upper(n, q)) {
        c.upper = ledger.records()[*i].value;
        c.upper_rule = ledger.records()[*i].rule;
        c.trust = weakest(c.trust, ledger.records()[*i].trust);
      }
      cells.push_back(std::move(c));
    }
  }

  std::ostringstream out;
  if (format == TableFormat::kCsv) {
    out << "n,q,lower,upper,lower_rule,upper_rule,trust\n";
    for (const Cell& c : cells) {
      out << c.n << ',' << c.q << ',' << c.lower << ','
          << (c.upper ? c.upper->str() : "") << ',' << c.lower_rule << ','
          << c.upper_rule << ',' << to_string(c.trust) << '\n';
    }
    return out.str();
  }

  auto text_of = [](const Cell& c) {
    std::string s;
    if (c.upper && *c.upper == c.lower) {
      s = c.lower.str();
    } else {
      s = "[" + c.lower.str() + "," + (c.upper ? c.upper->str() : "inf") + "]";
    }
    if (c.trust == Trust::kAssumedExternal) s += "*";
    return s;
  };
  std::vector<std::size_t> width(n_max + 1, 0);
  width[0] = std::string("f(n,q)").size();
  for (const Cell& c : cells) {
    width[c.n] = std::max(width[c.n], text_of(c).size());
    width[0] = std::max(width[0], ("q=" + std::to_string(c.q)).size());
  }
  for (int n = 1; n <= n_max; ++n) {
    width[n] = std::max(width[n], ("n=" + std::to_string(n)).size());
  }
  out << std::left << std::setw(width[0]) << "f(n,q)";
  for (int n = 1; n <= n_max; ++n) {
    out << "  " << std::right << std::setw(width[n]) << ("n=" + std::to_string(n));
  }
  out << '\n';
  for (std::size_t row = 0; row < q_list.size(); ++row) {
    out << std::left << std::setw(width[0]) << ("q=" + std::to_string(q_list[row]));
    for (int n = 1; n <= n_max; ++n) {
      out << "  " << std::right << std::setw(width[n])
          << text_of(cells[row * n_max + (n - 1)]);
    }
    out << '\n';
  }
  out << "\n* depends on an assumed-external fact\n";
  for (const Cell& c : cells) {
    out << "  f" << key_string(c.n, c.q) << ": lower " << c.lower << " ("
        << c.lower_rule << "), upper " << (c.upper ? c.upper->str() : "inf")
        << " (" << c.upper_rule << "), " << to_string(c.trust) << '\n';
  }
  return out.str();
}

}  // namespace skirt

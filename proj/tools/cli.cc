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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "skirt/arrays.h"
#include "skirt/assets.h"
#include "skirt/bounds.h"
#include "skirt/constructions.h"
#include "skirt/cover.h"
#include "skirt/error.h"
#include "skirt/io.h"
#include "skirt/verify.h"

namespace skirt::cli {
namespace {

// key=value pairs, printed as one line.
class ResultLine {
 public:
  template <typename T>
  ResultLine& add(const std::string& key, const T& value) {
    std::ostringstream s;
    s << std::boolalpha << value;
    fields_.emplace_back(key, s.str());
    return *this;
  }
  void print(std::ostream& out) const {
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      out << (i ? " " : "") << fields_[i].first << '=' << fields_[i].second;
    }
    out << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string fixed6(double value) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << value;
  return s.str();
}

std::string join(const std::vector<int>& values, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += (i ? std::string(1, sep) : "") + std::to_string(values[i]);
  }
  return s;
}

std::string word_csv(const Word& w) {
  std::vector<int> values(w.symbols().begin(), w.symbols().end());
  return join(values);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << content;
  if (!file) throw IoError("failed writing " + path);
}

// ---------------------------------------------------------------------------
// Inputs shared by several subcommands.

struct SetSource {
  std::string file;
  std::string asset;
  bool one_based = false;
};

ParsedSet load_set(const SetSource& source) {
  if (!source.asset.empty()) {
    LoadedAsset loaded = load_asset(source.asset, /*verify=*/false);
    if (!loaded.set) throw ParameterError("asset " + source.asset + " is an array");
    return ParsedSet{.set = std::move(*loaded.set)};
  }
  if (source.file.empty()) throw ParameterError("one of --file or --asset is required");
  return read_tuple_set_file(source.file, source.one_based);
}

ParsedArray load_array(const SetSource& source) {
  if (!source.asset.empty()) {
    LoadedAsset loaded = load_asset(source.asset, /*verify=*/false);
    if (!loaded.array) throw ParameterError("asset " + source.asset + " is a tuple set");
    return ParsedArray{.array = std::move(*loaded.array),
                       .offset = loaded.info.offset,
                       .claimed_strength = loaded.info.strength};
  }
  if (source.file.empty()) throw ParameterError("one of --file or --asset is required");
  return read_array_file(source.file, source.one_based);
}

void add_set_source(CLI::App* cmd, SetSource& source) {
  cmd->add_option("--file", source.file, "Input file");
  cmd->add_option("--asset", source.asset, "Shipped asset name");
  cmd->add_flag("--one-based", source.one_based, "Symbols in the file start at 1");
}

struct LedgerArgs {
  std::string path;
  std::vector<std::string> assume;
};

void add_ledger_args(CLI::App* cmd, LedgerArgs& args) {
  cmd->add_option("--ledger", args.path, "Ledger file (read, updated and saved)");
  cmd->add_option("--assume", args.assume,
                  "Assumed-external fact n,q,value[,lower|upper|exact]");
}

BoundRecord parse_assumption(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream s(text);
  for (std::string part; std::getline(s, part, ',');) parts.push_back(part);
  if (parts.size() != 3 && parts.size() != 4) {
    throw ParameterError("--assume expects n,q,value[,kind], got '" + text + "'");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (parts[i].empty() ||
        parts[i].find_first_not_of("0123456789") != std::string::npos) {
      throw ParameterError("--assume: '" + parts[i] + "' is not a positive integer");
    }
  }
  BoundRecord record{.n = std::stoi(parts[0]),
                     .q = std::stoi(parts[1]),
                     .kind = BoundKind::kExact,
                     .value = BigInt(parts[2]),
                     .rule = "assumed",
                     .trust = Trust::kAssumedExternal};
  if (parts.size() == 4) {
    auto kind = parse_bound_kind(parts[3]);
    if (!kind) throw ParameterError("--assume: unknown kind '" + parts[3] + "'");
    record.kind = *kind;
  }
  return record;
}

Window window_for(int n, int q) { return Window{std::max(32, n), std::max(32, q)}; }

Ledger open_ledger(const LedgerArgs& args, Window window) {
  Ledger ledger(window);
  if (!args.path.empty() && std::filesystem::exists(args.path)) {
    std::ifstream in(args.path);
    if (!in) throw IoError("cannot open " + args.path);
    ledger = Ledger::load(in, window);
  }
  for (const std::string& text : args.assume) ledger.register_fact(parse_assumption(text));
  return ledger;
}

void save_ledger(const LedgerArgs& args, const Ledger& ledger) {
  if (args.path.empty()) return;
  std::ostringstream text;
  ledger.save(text);
  write_file(args.path, text.str());
}

// Registers the shipped witness sets whose size improves the ledger.
void seed_witnesses(Ledger& ledger) {
  for (const char* name : {"w43", "w63", "w54"}) {
    LoadedAsset loaded = load_asset(name, /*verify=*/false);
    const TupleSet& set = *loaded.set;
    const auto upper = ledger.upper_value(set.n(), set.q());
    if (!upper || *upper > set.size()) {
      ledger.register_witness(set, std::string("witness:") + name);
    }
  }
}

// ---------------------------------------------------------------------------
// Subcommands.

struct VerifyArgs {
  SetSource source;
  bool all = false;
  int workers = 1;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const ParsedSet parsed = load_set(args.source);
  VerifyOptions options;
  options.mode = args.all ? VerifyMode::kAllCounterexamples : VerifyMode::kFirstCounterexample;
  options.workers = args.workers;
  const Verdict verdict = verify_skirting_set(parsed.set, options);

  ResultLine line;
  line.add("is_skirting", verdict.is_skirting)
      .add("size", parsed.set.size())
      .add("n", parsed.set.n())
      .add("q", parsed.set.q());
  if (!verdict.is_skirting) {
    line.add("counterexample", word_csv(verdict.counterexamples.front()));
    if (args.all) line.add("uncovered", verdict.counterexamples.size());
  }
  if (parsed.duplicates > 0) line.add("duplicates", parsed.duplicates);
  line.print(out);

  if (verdict.is_skirting) {
    out << "every word of Z_" << parsed.set.q() << "^" << parsed.set.n()
        << " is skirted by the set\n";
    return kOk;
  }
  out << "not a skirting set; skirted by no member:\n";
  for (const Word& w : verdict.counterexamples) out << to_string(w, parsed.offset) << '\n';
  return kNotVerified;
}

struct ConstructArgs {
  std::string method;
  int n = 0;
  int q = 0;
  int q_new = 0;
  int t = 0;
  int q_target = 0;
  std::string a_file;
  std::string b_file;
  SetSource source;
  bool trust_uncertified = false;
  std::string out_path;
};

int cmd_construct(const ConstructArgs& args, std::ostream& out) {
  auto need = [](int value, const char* flag) {
    if (value <= 0) throw ParameterError(std::string("--method needs ") + flag);
    return value;
  };
  ResultLine line;
  line.add("method", args.method);
  std::optional<TupleSet> set;
  std::string note;
  if (args.method == "product") {
    if (args.a_file.empty() || args.b_file.empty()) {
      throw ParameterError("product needs --a and --b");
    }
    set = product_construct(read_tuple_set_file(args.a_file, args.source.one_based).set,
                            read_tuple_set_file(args.b_file, args.source.one_based).set);
  } else if (args.method == "embed") {
    set = embed_alphabet(load_set(args.source).set, need(args.q_new, "--q-new"));
  } else if (args.method == "scalar") {
    set = scalar_multiples(need(args.n, "--n"), need(args.q, "--q"));
  } else if (args.method == "diag") {
    set = diag_union(need(args.q, "--q"));
  } else if (args.method == "block3") {
    set = block3(need(args.n, "--n"));
  } else if (args.method == "from-sa") {
    ParsedArray parsed = load_array(args.source);
    const int q_target = need(args.q_target, "--q-target");
    const int t = args.t > 0 ? args.t : parsed.array.n() + parsed.array.q() - q_target;
    if (!args.trust_uncertified) {
      const StrengthVerdict verdict = verify_array_strength(parsed.array, t);
      if (!verdict.holds) {
        line.add("strength_certified", false).add("t", t);
        line.print(out);
        out << "input array does not have skirting strength " << t << '\n';
        return kNotVerified;
      }
    }
    ConstructionReport report =
        from_skirting_array(parsed.array, t, q_target, args.trust_uncertified);
    note = "strength " + report.inputs["strength"];
    set = std::move(report.set);
  } else {
    throw ParameterError("unknown --method '" + args.method + "'");
  }

  std::string verified = "skipped";
  bool ok = true;
  const auto universe = checked_power(set->q(), set->n());
  if (universe && *universe <= Limits::FromEnvironment().universe_cap) {
    ok = verify_skirting_set(*set).is_skirting;
    verified = ok ? "true" : "false";
  }
  std::ostringstream text;
  write_tuple_set(*set, text);
  if (!args.out_path.empty()) write_file(args.out_path, text.str());

  line.add("n", set->n()).add("q", set->q()).add("size", set->size()).add("verified", verified);
  line.print(out);
  if (!note.empty()) out << "# " << note << '\n';
  if (args.out_path.empty()) out << text.str();
  return ok ? kOk : kNotVerified;
}

struct SolveArgs {
  int n = 0;
  int q = 0;
  bool greedy = false;
  double budget = 600;
  std::uint64_t nodes = 50'000'000;
  std::uint64_t seed = 0;
  bool single_worker = false;
  std::string emit_lp;
  std::string symmetry = "neighbor";
  std::string out_path;
  LedgerArgs ledger;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  const CoverInstance instance = build_cover_instance(args.n, args.q);
  if (!args.emit_lp.empty()) {
    std::ostringstream lp;
    emit_lp(instance, lp);
    write_file(args.emit_lp, lp.str());
    ResultLine()
        .add("lp", args.emit_lp)
        .add("binaries", instance.universe_size())
        .add("constraints", instance.universe_size())
        .add("terms_per_constraint", instance.degree())
        .print(out);
    return kOk;
  }

  Ledger ledger = open_ledger(args.ledger, window_for(args.n, args.q));
  auto solve = [&] {
    if (args.greedy) return greedy_cover(instance, args.seed);
    ExactOptions options;
    options.time_budget = std::chrono::duration<double>(args.budget);
    options.node_budget = args.nodes;
    options.seed = args.seed;
    if (args.symmetry == "translation") {
      options.symmetry = SymmetryBreaking::kTranslation;
    } else if (args.symmetry != "neighbor") {
      throw ParameterError("--symmetry is translation or neighbor");
    }
    if (auto upper = ledger.upper_value(args.n, args.q);
        upper && *upper <= instance.universe_size()) {
      options.initial_upper = upper->convert_to<std::uint64_t>();
    }
    return exact_cover(instance, options);
  };
  const SolveResult result = solve();

  std::ostringstream text;
  write_tuple_set(result.best_set, text);
  if (!args.out_path.empty()) write_file(args.out_path, text.str());

  if (!args.greedy && !args.ledger.path.empty()) {
    if (result.status == SolveStatus::kOptimal) {
      ledger.register_fact({.n = args.n, .q = args.q, .kind = BoundKind::kExact,
                            .value = result.best_set.size(), .rule = "exact-cover"});
    } else {
      if (result.proven_lower > 0) {
        ledger.register_fact({.n = args.n, .q = args.q, .kind = BoundKind::kLower,
                              .value = result.proven_lower, .rule = "branch-and-bound"});
      }
      ledger.register_witness(result.best_set, "exact-cover-incumbent");
    }
    save_ledger(args.ledger, ledger);
  }

  ResultLine line;
  if (args.greedy) {
    line.add("greedy", result.best_set.size());
  } else if (result.status == SolveStatus::kOptimal) {
    line.add("optimal", result.best_set.size());
  } else {
    line.add("status", to_string(result.status))
        .add("best", result.best_set.size())
        .add("lower", result.proven_lower);
  }
  line.add("n", args.n)
      .add("q", args.q)
      .add("nodes", result.nodes)
      .add("seed", result.seed)
      .add("workers", 1)
      .add("elapsed", fixed6(result.elapsed.count()));
  line.print(out);
  if (args.out_path.empty()) out << text.str();
  if (args.greedy || result.status == SolveStatus::kOptimal) return kOk;
  return kBudget;
}

struct BoundsArgs {
  int n = 0;
  int q = 0;
  bool witness_only = false;
  LedgerArgs ledger;
};

int cmd_bounds(const BoundsArgs& args, std::ostream& out) {
  Ledger ledger = open_ledger(args.ledger, window_for(args.n, args.q));
  seed_witnesses(ledger);
  propagate(ledger, {.inter_parameter = !args.witness_only});
  save_ledger(args.ledger, ledger);

  const auto lower = ledger.best_lower(args.n, args.q);
  const auto upper = ledger.best_upper(args.n, args.q);
  Trust trust = Trust::kDerived;
  if (lower) trust = weakest(trust, ledger.records()[*lower].trust);
  if (upper) trust = weakest(trust, ledger.records()[*upper].trust);
  ResultLine()
      .add("n", args.n)
      .add("q", args.q)
      .add("lower", ledger.lower_value(args.n, args.q))
      .add("upper", upper ? ledger.records()[*upper].value.str() : "inf")
      .add("lower_rule", lower ? ledger.records()[*lower].rule : "-")
      .add("upper_rule", upper ? ledger.records()[*upper].rule : "-")
      .add("trust", to_string(trust))
      .print(out);
  if (lower) out << "lower: " << ledger.chain(*lower) << '\n';
  if (upper) out << "upper: " << ledger.chain(*upper) << '\n';
  return kOk;
}

struct TableArgs {
  std::vector<int> q_list{2, 3, 4};
  int n_max = 6;
  std::string format = "text";
  bool witness_only = false;
  bool solve = false;
  std::uint64_t solve_cap = 100;
  std::uint64_t solve_nodes = 50'000'000;
  LedgerArgs ledger;
};

int cmd_table(const TableArgs& args, std::ostream& out) {
  if (args.n_max < 1) throw ParameterError("--n-max must be at least 1");
  TableFormat format;
  if (args.format == "text") {
    format = TableFormat::kText;
  } else if (args.format == "csv") {
    format = TableFormat::kCsv;
  } else {
    throw ParameterError("--format is text or csv");
  }
  const int q_max = *std::max_element(args.q_list.begin(), args.q_list.end());
  Ledger ledger = open_ledger(args.ledger, window_for(args.n_max, q_max));
  seed_witnesses(ledger);
  int solved = 0;
  if (args.solve) {
    for (int q : args.q_list) {
      for (int n = 1; n <= args.n_max; ++n) {
        const auto universe = checked_power(q, n);
        if (q < 2 || !universe || *universe > args.solve_cap) continue;
        ExactOptions options;
        options.node_budget = args.solve_nodes;
        const SolveResult result = exact_cover(build_cover_instance(n, q), options);
        if (result.status != SolveStatus::kOptimal) continue;
        const auto lower = ledger.best_lower(n, q);
        const auto upper = ledger.best_upper(n, q);
        const bool known = lower && upper &&
                           ledger.records()[*lower].value == result.best_set.size() &&
                           ledger.records()[*upper].value == result.best_set.size() &&
                           ledger.records()[*lower].trust != Trust::kAssumedExternal &&
                           ledger.records()[*upper].trust != Trust::kAssumedExternal;
        if (known) continue;
        ledger.register_fact({.n = n, .q = q, .kind = BoundKind::kExact,
                              .value = result.best_set.size(), .rule = "exact-cover"});
        ++solved;
      }
    }
  }
  propagate(ledger, {.inter_parameter = !args.witness_only});
  save_ledger(args.ledger, ledger);

  ResultLine()
      .add("rows", args.q_list.size())
      .add("n_max", args.n_max)
      .add("format", args.format)
      .add("solved", solved)
      .print(out);
  out << render_table(args.q_list, args.n_max, ledger, format);
  return kOk;
}

struct CqArgs {
  int q = 0;
  LedgerArgs ledger;
};

int cmd_cq(const CqArgs& args, std::ostream& out) {
  Ledger ledger = open_ledger(args.ledger, window_for(1, args.q));
  seed_witnesses(ledger);
  propagate(ledger);
  const CqBounds bounds = cq_bounds(args.q, ledger);
  ResultLine()
      .add("lower", fixed6(bounds.lower))
      .add("upper", fixed6(bounds.upper))
      .add("witness_n", bounds.witness_n)
      .add("trust", to_string(bounds.trust))
      .add("rule", bounds.rule)
      .print(out);
  out << "C_" << args.q << " >= " << bounds.lower_expression << " = "
      << fixed6(bounds.lower) << '\n';
  out << "C_" << args.q << " <= " << bounds.upper_expression << " = "
      << fixed6(bounds.upper) << " (" << to_string(bounds.trust) << ")\n";
  out << "ln C_" << args.q << " in [" << fixed6(bounds.log_lower) << ", "
      << fixed6(bounds.log_upper) << "]\n";
  return kOk;
}

struct SaVerifyArgs {
  SetSource source;
  int t = 0;
  bool covering = false;
};

void print_strength(ResultLine& line, const StrengthVerdict& verdict) {
  if (!verdict.holds) {
    line.add("failing_columns", join(verdict.failing_columns));
    if (verdict.failing_tuple) line.add("failing_tuple", word_csv(*verdict.failing_tuple));
  }
}

int cmd_sa_verify(const SaVerifyArgs& args, std::ostream& out) {
  ParsedArray parsed = load_array(args.source);
  const int t = args.t > 0 ? args.t : parsed.claimed_strength.value_or(0);
  if (t <= 0) throw ParameterError("--t is required when the file has no t=");
  const StrengthVerdict verdict = args.covering ? verify_covering_array(parsed.array, t)
                                                : verify_array_strength(parsed.array, t);
  ResultLine line;
  line.add("holds", verdict.holds)
      .add("kind", args.covering ? "covering" : "skirting")
      .add("t", t)
      .add("N", parsed.array.num_rows())
      .add("n", parsed.array.n())
      .add("q", parsed.array.q());
  print_strength(line, verdict);
  line.print(out);
  if (!verdict.holds) {
    out << "columns {" << join(verdict.failing_columns, ' ') << "} miss the tuple "
        << to_string(*verdict.failing_tuple, parsed.offset) << '\n';
    return kNotVerified;
  }
  return kOk;
}

struct SaFromCaArgs {
  SetSource source;
  int t = 0;
  std::string out_path;
};

int cmd_sa_from_ca(const SaFromCaArgs& args, std::ostream& out) {
  ParsedArray parsed = load_array(args.source);
  const int t = args.t > 0 ? args.t : parsed.claimed_strength.value_or(0);
  if (t <= 0) throw ParameterError("--t is required when the file has no t=");
  const StrengthVerdict verdict = verify_covering_array(parsed.array, t);
  if (!verdict.holds) {
    ResultLine line;
    line.add("is_covering", false).add("t", t);
    print_strength(line, verdict);
    line.print(out);
    out << "input is not a covering array of strength " << t << '\n';
    return kNotVerified;
  }
  const SkirtArray sa = ca_to_sa(parsed.array);
  std::ostringstream text;
  write_array(sa, text, parsed.offset, t);
  if (!args.out_path.empty()) write_file(args.out_path, text.str());
  ResultLine()
      .add("holds", true)
      .add("t", t)
      .add("N", sa.num_rows())
      .add("deleted", parsed.array.num_rows() - sa.num_rows())
      .add("n", sa.n())
      .add("q", sa.q())
      .print(out);
  if (args.out_path.empty()) out << text.str();
  return kOk;
}

struct SaSearchArgs {
  LocalSearchOptions options;
  std::string out_path;
};

int cmd_sa_search(const SaSearchArgs& args, std::ostream& out) {
  const std::optional<SkirtArray> found = local_search_sa(args.options);
  ResultLine line;
  line.add("found", found.has_value())
      .add("t", args.options.t)
      .add("N", args.options.rows)
      .add("n", args.options.n)
      .add("q", args.options.q)
      .add("seed", args.options.seed);
  if (!found) {
    line.print(out);
    return kNotVerified;
  }
  std::ostringstream text;
  write_array(*found, text, 0, args.options.t);
  if (!args.out_path.empty()) write_file(args.out_path, text.str());
  line.print(out);
  if (args.out_path.empty()) out << text.str();
  return kOk;
}

struct SaBoundArgs {
  SetSource source;
  int t = 0;
  int q_target = 0;
  LedgerArgs ledger;
};

int cmd_sa_bound(const SaBoundArgs& args, std::ostream& out) {
  ParsedArray parsed = load_array(args.source);
  const int v = parsed.array.q();
  const int t = args.t > 0 ? args.t : parsed.array.n() + v - args.q_target;
  if (t < 1 || t > parsed.array.n()) {
    throw ParameterError("t = n + v - q_target = " + std::to_string(t) + " is out of range");
  }
  const StrengthVerdict verdict = verify_array_strength(parsed.array, t);
  if (!verdict.holds) {
    ResultLine line;
    line.add("holds", false).add("t", t);
    print_strength(line, verdict);
    line.print(out);
    out << "array does not have skirting strength " << t << '\n';
    return kNotVerified;
  }
  BoundRecord record = derive_f_bound(parsed.array, t, args.q_target);
  if (!args.ledger.path.empty()) {
    Ledger ledger = open_ledger(args.ledger, window_for(record.n, record.q));
    ledger.register_fact(record);
    save_ledger(args.ledger, ledger);
  }
  ResultLine()
      .add("upper", record.value)
      .add("n", record.n)
      .add("q", record.q)
      .add("t", t)
      .add("trust", to_string(record.trust))
      .add("rule", record.rule)
      .print(out);
  out << "f(" << record.n << "," << record.q << ") <= " << args.q_target << " - " << v
      << " + " << parsed.array.num_rows() << " = " << record.value << '\n';
  return kOk;
}

struct AssetsArgs {
  std::string name;
  std::string export_dir;
  bool no_verify = false;
};

int cmd_assets(const AssetsArgs& args, std::ostream& out) {
  std::vector<LoadedAsset> loaded;
  if (args.name.empty()) {
    loaded = load_assets(!args.no_verify);
  } else {
    loaded.push_back(load_asset(args.name, !args.no_verify));
  }
  if (!args.export_dir.empty()) {
    std::filesystem::create_directories(args.export_dir);
    for (const LoadedAsset& asset : loaded) {
      const std::string base = args.export_dir + "/" + std::string(asset.info.name);
      std::ostringstream text;
      text << "# " << asset.receipt << '\n';
      if (asset.set) {
        write_tuple_set(*asset.set, text);
        write_file(base + ".set", text.str());
      } else {
        write_array(*asset.array, text, 0, asset.info.strength);
        write_file(base + ".array", text.str());
        std::ostringstream printed;
        printed << "# as printed; read with --one-based\n";
        write_array(*asset.array, printed, asset.info.offset, asset.info.strength);
        write_file(base + ".printed.array", printed.str());
      }
    }
  }
  const auto verified = std::count_if(loaded.begin(), loaded.end(),
                                      [](const LoadedAsset& a) { return a.verified; });
  ResultLine().add("assets", loaded.size()).add("verified", verified).print(out);
  for (const LoadedAsset& asset : loaded) {
    std::ostringstream crc;
    crc << std::hex << std::setw(8) << std::setfill('0') << asset.info.checksum;
    out << asset.receipt << "; crc32=" << crc.str() << '\n';
  }
  if (args.no_verify) return kOk;
  return verified == static_cast<long>(loaded.size()) ? kOk : kNotVerified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skirting sets and skirting arrays over Z_q^n", "skirt"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a tuple set is skirting");
  add_set_source(verify_cmd, verify.source);
  verify_cmd->add_flag("--all", verify.all, "Report every uncovered word");
  verify_cmd->add_option("--workers", verify.workers, "Marking threads")->check(CLI::Range(1, 256));

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build a skirting set");
  construct_cmd->add_option("--method", construct.method, "product|embed|scalar|diag|block3|from-sa")
      ->required()
      ->check(CLI::IsMember({"product", "embed", "scalar", "diag", "block3", "from-sa"}));
  construct_cmd->add_option("--n", construct.n, "Word length");
  construct_cmd->add_option("--q", construct.q, "Alphabet size");
  construct_cmd->add_option("--q-new", construct.q_new, "Target alphabet for embed");
  construct_cmd->add_option("--t", construct.t, "Array strength for from-sa");
  construct_cmd->add_option("--q-target", construct.q_target, "Target alphabet for from-sa");
  construct_cmd->add_option("--a", construct.a_file, "First factor for product");
  construct_cmd->add_option("--b", construct.b_file, "Second factor for product");
  add_set_source(construct_cmd, construct.source);
  construct_cmd->add_flag("--trust-uncertified", construct.trust_uncertified,
                          "Skip the strength check for from-sa");
  construct_cmd->add_option("--out", construct.out_path, "Write the set here");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Minimum skirting set by branch and bound");
  solve_cmd->add_option("--n", solve.n, "Word length")->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--q", solve.q, "Alphabet size")->required()->check(CLI::Range(2, 65535));
  solve_cmd->add_flag("--greedy", solve.greedy, "Greedy cover only");
  solve_cmd->add_option("--budget", solve.budget, "Wall-clock budget in seconds")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--nodes", solve.nodes, "Node budget");
  solve_cmd->add_option("--seed", solve.seed, "Greedy tie-break seed");
  solve_cmd->add_flag("--single-worker", solve.single_worker, "Reproducible node counts");
  solve_cmd->add_option("--emit-lp", solve.emit_lp, "Write the covering ILP and exit");
  solve_cmd->add_option("--symmetry", solve.symmetry, "translation|neighbor")
      ->check(CLI::IsMember({"translation", "neighbor"}));
  solve_cmd->add_option("--out", solve.out_path, "Write the best set here");
  add_ledger_args(solve_cmd, solve.ledger);

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Best known bounds on f(n,q)");
  bounds_cmd->add_option("--n", bounds.n, "Word length")->required()->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--q", bounds.q, "Alphabet size")->required()->check(CLI::Range(2, 65535));
  bounds_cmd->add_flag("--witness-only", bounds.witness_only, "No inter-parameter rules");
  add_ledger_args(bounds_cmd, bounds.ledger);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Table of f(n,q) values and intervals");
  table_cmd->add_option("--q", table.q_list, "Alphabet sizes")->check(CLI::Range(2, 65535));
  table_cmd->add_option("--n-max", table.n_max, "Largest n");
  table_cmd->add_option("--format", table.format, "text|csv")
      ->check(CLI::IsMember({"text", "csv"}));
  table_cmd->add_flag("--witness-only", table.witness_only, "No inter-parameter rules");
  table_cmd->add_flag("--solve", table.solve, "Run the exact solver on small cells");
  table_cmd->add_option("--solve-cap", table.solve_cap, "Largest q^n solved with --solve");
  table_cmd->add_option("--solve-nodes", table.solve_nodes, "Node budget per solved cell");
  add_ledger_args(table_cmd, table.ledger);

  CqArgs cq;
  auto* cq_cmd = app.add_subcommand("cq", "Bounds on the growth constant C_q");
  cq_cmd->add_option("--q", cq.q, "Alphabet size")->required()->check(CLI::Range(2, 65535));
  add_ledger_args(cq_cmd, cq.ledger);

  SaVerifyArgs sa_verify;
  auto* sa_verify_cmd = app.add_subcommand("sa-verify", "Check skirting-array strength");
  add_set_source(sa_verify_cmd, sa_verify.source);
  sa_verify_cmd->add_option("--t", sa_verify.t, "Strength");
  sa_verify_cmd->add_flag("--covering", sa_verify.covering, "Check covering strength instead");

  SaFromCaArgs sa_from_ca;
  auto* sa_from_ca_cmd = app.add_subcommand("sa-from-ca", "Skirting array from a covering array");
  add_set_source(sa_from_ca_cmd, sa_from_ca.source);
  sa_from_ca_cmd->add_option("--t", sa_from_ca.t, "Strength");
  sa_from_ca_cmd->add_option("--out", sa_from_ca.out_path, "Write the array here");

  SaSearchArgs sa_search;
  auto* sa_search_cmd = app.add_subcommand("sa-search", "Local search for a skirting array");
  sa_search_cmd->add_option("--t", sa_search.options.t, "Strength")->required();
  sa_search_cmd->add_option("--n", sa_search.options.n, "Columns")->required();
  sa_search_cmd->add_option("--q", sa_search.options.q, "Alphabet size")->required();
  sa_search_cmd->add_option("--rows", sa_search.options.rows, "Rows")->required();
  sa_search_cmd->add_option("--seed", sa_search.options.seed, "Seed");
  sa_search_cmd->add_option("--iters", sa_search.options.iterations, "Move budget");
  sa_search_cmd->add_option("--plateau", sa_search.options.plateau, "Restart after this many idle moves");
  sa_search_cmd->add_option("--out", sa_search.out_path, "Write the array here");

  SaBoundArgs sa_bound;
  auto* sa_bound_cmd = app.add_subcommand("sa-bound", "Upper bound on f(n,q) from a skirting array");
  add_set_source(sa_bound_cmd, sa_bound.source);
  sa_bound_cmd->add_option("--q-target", sa_bound.q_target, "Target alphabet")->required();
  sa_bound_cmd->add_option("--t", sa_bound.t, "Strength (default n + v - q_target)");
  add_ledger_args(sa_bound_cmd, sa_bound.ledger);

  AssetsArgs assets;
  auto* assets_cmd = app.add_subcommand("assets", "List, verify and export shipped matrices");
  assets_cmd->add_option("--name", assets.name, "Single asset");
  assets_cmd->add_option("--export", assets.export_dir, "Write asset files to this directory");
  assets_cmd->add_flag("--no-verify", assets.no_verify, "Skip verification");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << "status=help\n" << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << "status=usage-error\n";
    err << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*construct_cmd) return cmd_construct(construct, out);
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*bounds_cmd) return cmd_bounds(bounds, out);
    if (*table_cmd) return cmd_table(table, out);
    if (*cq_cmd) return cmd_cq(cq, out);
    if (*sa_verify_cmd) return cmd_sa_verify(sa_verify, out);
    if (*sa_from_ca_cmd) return cmd_sa_from_ca(sa_from_ca, out);
    if (*sa_search_cmd) return cmd_sa_search(sa_search, out);
    if (*sa_bound_cmd) return cmd_sa_bound(sa_bound, out);
    if (*assets_cmd) return cmd_assets(assets, out);
  } catch (const IoError& e) {
    out << "status=io-error\n";
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ResourceError& e) {
    out << "status=resource-cap\n";
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const InconsistencyError& e) {
    out << "status=inconsistent\n";
    err << "error: " << e.what() << '\n';
    return kNotVerified;
  } catch (const Error& e) {
    out << "status=usage-error\n";
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    out << "status=io-error\n";
    err << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace skirt::cli

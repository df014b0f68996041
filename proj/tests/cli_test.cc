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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.h"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  std::string first_line() const { return out.substr(0, out.find('\n')); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "skirt");
  std::ostringstream out, err;
  const int code = skirt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// A scratch directory per test case.
struct Scratch {
  std::filesystem::path dir;
  Scratch() {
    dir = std::filesystem::temp_directory_path() /
          ("skirt-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    std::filesystem::create_directories(dir);
  }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto path = (dir / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("verify") {
  Scratch scratch;
  const Outcome exported = run({"assets", "--export", scratch.dir.string()});
  REQUIRE(exported.code == 0);
  const Outcome ok = run({"verify", "--file", scratch.path("w54.set")});
  CHECK(ok.code == 0);
  CHECK(ok.first_line() == "is_skirting=true size=10 n=5 q=4");

  const Outcome empty = run({"verify", "--file", scratch.write("empty.set", "set n=2 q=3\n")});
  CHECK(empty.code == 1);
  CHECK(empty.first_line() == "is_skirting=false size=0 n=2 q=3 counterexample=0,0");
  CHECK(empty.out.find("\n0 0\n") != std::string::npos);

  const Outcome one_based =
      run({"verify", "--one-based", "--file", scratch.write("s.set", "set n=2 q=3\n1 1\n")});
  CHECK(one_based.code == 1);
  CHECK(one_based.out.find("\n1 1\n") != std::string::npos);

  CHECK(run({"verify", "--asset", "w43"}).code == 0);
  CHECK(run({"verify", "--file", scratch.path("missing.set")}).code == 5);
  CHECK(run({"verify", "--file", scratch.write("bad.set", "set n=2 q=3\n0 9\n")}).code == 5);
  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Outcome unknown_flag = run({"solve", "--n", "3", "--q", "3", "--bogus"});
  CHECK(unknown_flag.code == 2);
  CHECK(unknown_flag.first_line() == "status=usage-error");
  CHECK_FALSE(unknown_flag.err.empty());
  CHECK(run({"solve", "--n", "3"}).code == 2);
  CHECK(run({"construct", "--method", "block3", "--n", "5"}).code == 2);
  CHECK(run({"construct", "--method", "teleport"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("solve") {
  const Outcome r = run({"solve", "--n", "3", "--q", "3"});
  CHECK(r.code == 0);
  CHECK(r.first_line().rfind("optimal=5 n=3 q=3 ", 0) == 0);
  CHECK(r.out.find("set n=3 q=3\n") != std::string::npos);

  const Outcome greedy = run({"solve", "--n", "3", "--q", "3", "--greedy", "--seed", "4"});
  CHECK(greedy.code == 0);
  CHECK(greedy.first_line().rfind("greedy=", 0) == 0);

  const Outcome budget = run({"solve", "--n", "4", "--q", "4", "--nodes", "20"});
  CHECK(budget.code == 3);
  CHECK(budget.first_line().rfind("status=budget-exhausted ", 0) == 0);

  CHECK(run({"solve", "--n", "40", "--q", "40"}).code == 4);

  const Outcome a = run({"solve", "--n", "4", "--q", "3", "--single-worker", "--seed", "2"});
  const Outcome b = run({"solve", "--n", "4", "--q", "3", "--single-worker", "--seed", "2"});
  auto without_time = [](const std::string& s) { return s.substr(0, s.find(" elapsed=")); };
  CHECK(without_time(a.first_line()) == without_time(b.first_line()));
  CHECK(a.out.substr(a.out.find('\n')) == b.out.substr(b.out.find('\n')));
}

TEST_CASE("solve writes the LP model and the ledger") {
  Scratch scratch;
  const Outcome lp = run({"solve", "--n", "2", "--q", "3", "--emit-lp", scratch.path("m.lp")});
  CHECK(lp.code == 0);
  CHECK(lp.first_line() == "lp=" + scratch.path("m.lp") +
                               " binaries=9 constraints=9 terms_per_constraint=4");
  CHECK(read(scratch.path("m.lp")).find("Subject To\n") != std::string::npos);

  const std::string ledger = scratch.path("ledger.txt");
  CHECK(run({"solve", "--n", "3", "--q", "3", "--ledger", ledger}).code == 0);
  const Outcome bounds = run({"bounds", "--n", "3", "--q", "3", "--ledger", ledger});
  CHECK(bounds.code == 0);
  CHECK(bounds.first_line() ==
        "n=3 q=3 lower=5 upper=5 lower_rule=exact-cover upper_rule=exact-cover trust=derived");
}

TEST_CASE("construct") {
  Scratch scratch;
  const Outcome block = run({"construct", "--method", "block3", "--n", "6"});
  CHECK(block.code == 0);
  CHECK(block.first_line() == "method=block3 n=6 q=3 size=21 verified=true");

  const Outcome diag = run({"construct", "--method", "diag", "--q", "4", "--out", scratch.path("d.set")});
  CHECK(diag.code == 0);
  CHECK(run({"verify", "--file", scratch.path("d.set")}).first_line() ==
        "is_skirting=true size=7 n=4 q=4");

  CHECK(run({"construct", "--method", "scalar", "--n", "2", "--q", "3", "--out",
             scratch.path("s.set")}).code == 0);
  const Outcome product = run({"construct", "--method", "product", "--a", scratch.path("s.set"),
                               "--b", scratch.path("s.set")});
  CHECK(product.first_line() == "method=product n=4 q=3 size=9 verified=true");
  const Outcome embed =
      run({"construct", "--method", "embed", "--file", scratch.path("s.set"), "--q-new", "5"});
  CHECK(embed.first_line() == "method=embed n=2 q=5 size=3 verified=true");

  const std::string oa = scratch.write("oa.array", "array N=4 n=3 q=2\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n");
  const Outcome from_sa = run({"construct", "--method", "from-sa", "--file", oa, "--q-target", "3"});
  CHECK(from_sa.code == 0);
  CHECK(from_sa.first_line() == "method=from-sa n=3 q=3 size=5 verified=true");
  const std::string weak = scratch.write("weak.array", "array N=1 n=3 q=2\n0 0 0\n");
  CHECK(run({"construct", "--method", "from-sa", "--file", weak, "--q-target", "3"}).code == 1);
  const Outcome large = run({"construct", "--method", "from-sa", "--asset", "sa-19-4-20-4",
                             "--q-target", "20", "--out", scratch.path("big.set")});
  CHECK(large.code == 0);
  CHECK(large.first_line() == "method=from-sa n=20 q=20 size=35 verified=skipped");
}

TEST_CASE("bounds, table and cq") {
  const Outcome b = run({"bounds", "--n", "7", "--q", "3", "--assume", "6,3,18"});
  CHECK(b.code == 0);
  CHECK(b.first_line().rfind("n=7 q=3 lower=19 ", 0) == 0);
  CHECK(b.first_line().find("trust=assumed-external") != std::string::npos);

  CHECK(run({"bounds", "--n", "2", "--q", "3", "--assume", "2,3,2"}).code == 1);
  CHECK(run({"bounds", "--n", "2", "--q", "3", "--assume", "2,3"}).code == 2);

  const Outcome csv = run({"table", "--q", "4", "--n-max", "5", "--witness-only", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("\n5,4,5,10,sphere,witness:w54,derived\n") != std::string::npos);

  const Outcome row = run({"table", "--q", "3", "--n-max", "6", "--format", "csv", "--assume",
                           "5,3,12", "--assume", "6,3,18", "--solve", "--solve-cap", "81"});
  CHECK(row.out.find("\n3,3,5,5,exact-cover,exact-cover,derived\n") != std::string::npos);
  CHECK(row.out.find("\n4,3,8,8,exact-cover,witness:w43,derived\n") != std::string::npos);
  CHECK(row.out.find("\n6,3,18,18,assumed,assumed,assumed-external\n") != std::string::npos);

  CHECK(run({"cq", "--q", "4"}).first_line() ==
        "lower=1.333333 upper=1.584893 witness_n=5 trust=verified-witness rule=witness:w54");
  CHECK(run({"cq", "--q", "3", "--assume", "6,3,18"}).first_line() ==
        "lower=1.500000 upper=1.618870 witness_n=6 trust=assumed-external rule=assumed");
  CHECK(run({"cq", "--q", "3"}).first_line() ==
        "lower=1.500000 upper=1.661001 witness_n=6 trust=verified-witness rule=witness:w63");
}

TEST_CASE("skirting-array commands") {
  Scratch scratch;
  const std::string oa = scratch.write("oa.array", "array N=4 n=3 q=2\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n");
  CHECK(run({"sa-verify", "--t", "2", "--file", oa}).first_line() ==
        "holds=true kind=skirting t=2 N=4 n=3 q=2");
  const Outcome fail = run({"sa-verify", "--t", "3", "--covering", "--file", oa});
  CHECK(fail.code == 1);
  CHECK(fail.first_line() ==
        "holds=false kind=covering t=3 N=4 n=3 q=2 failing_columns=0,1,2 failing_tuple=0,0,1");
  CHECK(run({"sa-verify", "--file", oa}).code == 2);

  const Outcome reduced = run({"sa-from-ca", "--t", "2", "--file", oa});
  CHECK(reduced.code == 0);
  CHECK(reduced.first_line() == "holds=true t=2 N=4 deleted=0 n=3 q=2");

  const Outcome table1 = run({"sa-verify", "--asset", "sa-19-4-20-4"});
  CHECK(table1.first_line() == "holds=true kind=skirting t=4 N=19 n=20 q=4");

  const Outcome bound = run({"sa-bound", "--asset", "sa-19-4-20-4", "--q-target", "20"});
  CHECK(bound.first_line() == "upper=35 n=20 q=20 t=4 trust=derived rule=skirting-array");

  const Outcome found = run({"sa-search", "--t", "2", "--n", "3", "--q", "2", "--rows", "4",
                             "--seed", "5", "--out", scratch.path("found.array")});
  CHECK(found.code == 0);
  CHECK(found.first_line() == "found=true t=2 N=4 n=3 q=2 seed=5");
  CHECK(run({"sa-verify", "--file", scratch.path("found.array")}).code == 0);
  CHECK(run({"sa-search", "--t", "2", "--n", "3", "--q", "2", "--rows", "3", "--iters", "500"})
            .code == 1);
}

TEST_CASE("assets") {
  Scratch scratch;
  const Outcome all = run({"assets", "--export", scratch.dir.string()});
  CHECK(all.code == 0);
  CHECK(all.first_line() == "assets=4 verified=4");
  CHECK(run({"sa-verify", "--one-based", "--file", scratch.path("sa-19-4-20-4.printed.array")})
            .first_line() == "holds=true kind=skirting t=4 N=19 n=20 q=4");
  CHECK(read(scratch.path("sa-19-4-20-4.printed.array")).find("\n1 1 1 1 1 1 1 1 1 1 1 2 2 2 3") !=
        std::string::npos);
  CHECK(run({"assets", "--name", "nope"}).code == 2);
}

TEST_CASE("every result line comes first") {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{"solve", "--n", "2", "--q", "3"},
                                             {"cq", "--q", "5"},
                                             {"table", "--q", "3", "--n-max", "3"},
                                             {"assets", "--no-verify"},
                                             {"verify", "--asset", "w63"}}) {
    const Outcome r = run(args);
    CHECK(r.first_line().find('=') != std::string::npos);
    CHECK(r.first_line().find(": ") == std::string::npos);
  }
}

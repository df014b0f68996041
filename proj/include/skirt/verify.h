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

#include <cstdint>
#include <vector>

#include "skirt/limits.h"
#include "skirt/word.h"

namespace skirt {

enum class VerifyMode { kFirstCounterexample, kAllCounterexamples };

struct Verdict {
  bool is_skirting = false;
  // Words skirted by no member of the set, in lexicographic order.
  std::vector<Word> counterexamples;
  // Universe elements examined before the verdict was reached.
  std::uint64_t checked = 0;
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kFirstCounterexample;
  // 0 or 1 runs single-threaded; the verdict is identical either way.
  int workers = 1;
  Limits limits = Limits::FromEnvironment();
};

// Decides whether every word of Z_q^n (members of s included) is skirted by
// some member of s. Coverage is marked in a bitset indexed by rank, so the
// cost is O(|s| (q-1)^n + q^n).
Verdict verify_skirting_set(const TupleSet& s, const VerifyOptions& options = {});

}  // namespace skirt

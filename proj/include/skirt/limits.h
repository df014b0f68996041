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

namespace skirt {

// Desk-scale resource caps. Defaults can be overridden through the
// environment: SKIRT_UNIVERSE_CAP, SKIRT_ENUMERATION_CAP, SKIRT_WORK_CAP.
struct Limits {
  // Largest q^n the verifier and the cover-instance builder will touch.
  std::uint64_t universe_cap = std::uint64_t{1} << 28;
  // Largest (q-1)^n a neighbor enumeration may emit.
  std::uint64_t enumeration_cap = std::uint64_t{1} << 28;
  // Largest C(n,t) * q^t an array checker or search may touch.
  std::uint64_t work_cap = std::uint64_t{1} << 32;

  static Limits FromEnvironment();
};

}  // namespace skirt

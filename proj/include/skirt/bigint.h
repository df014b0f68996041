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

#include <boost/multiprecision/cpp_int.hpp>

namespace skirt {

// Bound values and closed-form counts outgrow 64 bits quickly (q^n for the
// sphere bound, 2^(n/2) for block sizes); they are kept exact.
using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(const BigInt& base, unsigned exponent);
BigInt binomial(unsigned n, unsigned k);

}  // namespace skirt

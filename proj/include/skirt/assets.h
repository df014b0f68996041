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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skirt/arrays.h"
#include "skirt/word.h"

namespace skirt {

enum class AssetLayout {
  // Each column of the printed matrix is one word of a tuple set.
  kColumnsAsElements,
  // Each printed row is one row of an array.
  kRowsAsRows,
};

// A matrix as printed in the source text: '&'-separated entries and
// '\\'-terminated rows, kept byte-for-byte with its CRC-32.
struct AssetInfo {
  std::string_view name;
  // The label the matrix originally carried, which may differ from the
  // shape-inferred name.
  std::string_view original_label;
  AssetLayout layout = AssetLayout::kColumnsAsElements;
  // Printed symbols minus `offset` give the zero-based canonical symbols.
  int offset = 0;
  // Alphabet size; 0 means max symbol + 1.
  int q = 0;
  // Strength claimed for an array asset.
  int strength = 0;
  std::string_view verbatim;
  std::uint32_t checksum = 0;
};

struct LoadedAsset {
  AssetInfo info;
  std::optional<TupleSet> set;
  std::optional<SkirtArray> array;
  bool verified = false;
  // One line describing the interpretation and the verifier outcome.
  std::string receipt;
};

const std::vector<AssetInfo>& asset_catalog();

// Throws IoError on a checksum mismatch or malformed matrix text and
// ParameterError on an unknown name. With verify, runs the skirting-set or
// array-strength verifier and records the outcome in the receipt.
LoadedAsset load_asset(const AssetInfo& info, bool verify = true);
LoadedAsset load_asset(std::string_view name, bool verify = true);
std::vector<LoadedAsset> load_assets(bool verify = true);

std::uint32_t crc32(std::string_view bytes);

}  // namespace skirt

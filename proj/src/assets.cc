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

#include "skirt/assets.h"

#include <algorithm>
#include <sstream>

#include <boost/crc.hpp>

#include "skirt/error.h"
#include "skirt/verify.h"

namespace skirt {
namespace {

constexpr std::string_view kW43 = R"mat(  0 & 1 & 1 & 0 & 2 & 2 & 0 & 1 \\
  0 & 1 & 1 & 0 & 2 & 2 & 1 & 0 \\
  0 & 1 & 0 & 1 & 0 & 1 & 2 & 2 \\
  0 & 1 & 0 & 1 & 1 & 0 & 2 & 2
)mat";
constexpr std::uint32_t kW43Crc = 0x26a2652b;

constexpr std::string_view kW63 = R"mat(  0 & 1 & 1 & 0 & 0 & 1 & 1 & 0 & 2 & 2 & 2 & 2 & 0 & 1 & 1 & 0 & 0 & 1 & 1 & 0 & 2 \\
  0 & 1 & 1 & 0 & 0 & 1 & 1 & 0 & 2 & 2 & 2 & 2 & 1 & 0 & 0 & 1 & 1 & 0 & 0 & 1 & 2 \\
  0 & 1 & 0 & 1 & 0 & 1 & 0 & 1 & 0 & 1 & 1 & 0 & 2 & 2 & 2 & 2 & 0 & 1 & 0 & 1 & 2 \\
  0 & 1 & 0 & 1 & 0 & 1 & 0 & 1 & 1 & 0 & 0 & 1 & 2 & 2 & 2 & 2 & 1 & 0 & 1 & 0 & 2 \\
  0 & 1 & 0 & 0 & 1 & 0 & 1 & 1 & 0 & 1 & 0 & 1 & 0 & 1 & 0 & 1 & 2 & 2 & 2 & 2 & 2 \\
  0 & 1 & 0 & 0 & 1 & 0 & 1 & 1 & 1 & 0 & 1 & 0 & 1 & 0 & 1 & 0 & 2 & 2 & 2 & 2 & 2 
)mat";
constexpr std::uint32_t kW63Crc = 0x83e3e85d;

constexpr std::string_view kW54 = R"mat(    0 & 1 & 0 & 1 & 3 & 3 & 2 & 2 & 1 & 3 \\
    0 & 1 & 0 & 1 & 3 & 3 & 2 & 2 & 3 & 1 \\
    0 & 1 & 2 & 2 & 0 & 1 & 3 & 2 & 3 & 3 \\
    0 & 1 & 2 & 2 & 0 & 1 & 2 & 3 & 3 & 3 \\
    0 & 1 & 1 & 0 & 1 & 0 & 3 & 3 & 2 & 2 
)mat";
constexpr std::uint32_t kW54Crc = 0xedf25b47;

constexpr std::string_view kTable1 = R"mat(1 & 1 & 1 & 1 & 1 & 1 & 1 & 1 & 1 & 1 & 1 & 2 & 2 & 2 & 3 & 3 & 3 & 4 & 4 & 4 
\\
 1 & 1 & 1 & 1 & 2 & 2 & 2 & 3 & 3 & 3 & 4 & 1 & 1 & 4 & 1 & 3 & 4 & 1 & 3 & 4 
\\
 1 & 3 & 2 & 3 & 4 & 1 & 3 & 1 & 1 & 1 & 4 & 4 & 2 & 4 & 4 & 2 & 1 & 2 & 4 & 3 
\\
 1 & 3 & 4 & 4 & 1 & 1 & 4 & 2 & 2 & 4 & 1 & 3 & 4 & 3 & 1 & 3 & 3 & 1 & 1 & 1 
\\
 2 & 1 & 3 & 4 & 4 & 1 & 4 & 4 & 2 & 3 & 4 & 2 & 1 & 2 & 3 & 2 & 2 & 4 & 2 & 1 
\\
 2 & 2 & 2 & 3 & 2 & 2 & 3 & 3 & 1 & 4 & 4 & 3 & 3 & 3 & 2 & 4 & 3 & 3 & 3 & 2 
\\
 2 & 2 & 3 & 1 & 2 & 4 & 4 & 1 & 4 & 4 & 3 & 3 & 1 & 1 & 1 & 4 & 2 & 2 & 2 & 3 
\\
 2 & 3 & 1 & 4 & 2 & 1 & 4 & 4 & 3 & 1 & 2 & 4 & 4 & 4 & 3 & 2 & 2 & 2 & 2 & 1 
\\
 2 & 3 & 3 & 4 & 3 & 2 & 4 & 2 & 4 & 2 & 3 & 4 & 4 & 2 & 2 & 2 & 1 & 1 & 1 & 2 
\\
 2 & 4 & 4 & 2 & 3 & 3 & 2 & 1 & 1 & 4 & 4 & 4 & 3 & 1 & 1 & 2 & 1 & 1 & 4 & 1 
\\
 3 & 2 & 1 & 1 & 4 & 3 & 4 & 3 & 3 & 3 & 1 & 2 & 2 & 3 & 4 & 3 & 2 & 2 & 3 & 3 
\\
 3 & 2 & 1 & 4 & 3 & 3 & 1 & 2 & 4 & 3 & 3 & 4 & 1 & 4 & 3 & 2 & 4 & 4 & 3 & 4 
\\
 3 & 2 & 2 & 3 & 1 & 2 & 2 & 1 & 2 & 3 & 1 & 1 & 2 & 4 & 3 & 1 & 4 & 1 & 1 & 3 
\\
 3 & 3 & 2 & 1 & 3 & 4 & 1 & 4 & 2 & 2 & 2 & 1 & 2 & 3 & 2 & 4 & 3 & 2 & 2 & 1 
\\
 3 & 4 & 3 & 3 & 4 & 3 & 2 & 1 & 3 & 4 & 4 & 3 & 3 & 2 & 3 & 1 & 4 & 3 & 3 & 1 
\\
 4 & 1 & 1 & 3 & 1 & 4 & 2 & 2 & 4 & 2 & 3 & 2 & 4 & 4 & 4 & 1 & 4 & 2 & 4 & 1 
\\
 4 & 1 & 2 & 2 & 1 & 4 & 3 & 2 & 3 & 1 & 2 & 3 & 1 & 3 & 3 & 3 & 2 & 4 & 2 & 4 
\\
 4 & 2 & 2 & 2 & 4 & 3 & 3 & 4 & 3 & 3 & 2 & 1 & 1 & 2 & 4 & 4 & 3 & 3 & 4 & 2 
\\
 4 & 4 & 1 & 4 & 2 & 1 & 1 & 4 & 2 & 4 & 4 & 2 & 1 & 2 & 3 & 4 & 2 & 2 & 2 & 3 
)mat";
constexpr std::uint32_t kTable1Crc = 0x2f3291ca;

std::vector<std::vector<int>> parse_matrix(const AssetInfo& info) {
  std::vector<std::vector<int>> rows;
  std::string text(info.verbatim);
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t stop = text.find("\\\\", start);
    if (stop == std::string::npos) stop = text.size();
    std::string row_text = text.substr(start, stop - start);
    start = stop + 2;
    std::replace(row_text.begin(), row_text.end(), '&', ' ');
    std::istringstream tokens(row_text);
    std::vector<int> row;
    int value = 0;
    while (tokens >> value) row.push_back(value - info.offset);
    if (!tokens.eof()) {
      throw IoError("asset " + std::string(info.name) + ": malformed entry");
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw IoError("asset " + std::string(info.name) + ": empty matrix");
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) {
      throw IoError("asset " + std::string(info.name) + ": ragged matrix");
    }
    for (int v : row) {
      if (v < 0) throw IoError("asset " + std::string(info.name) + ": negative symbol");
    }
  }
  return rows;
}

Word make_word(int q, const std::vector<int>& values) {
  std::vector<Symbol> symbols(values.begin(), values.end());
  return Word(q, std::move(symbols));
}

}  // namespace

std::uint32_t crc32(std::string_view bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

const std::vector<AssetInfo>& asset_catalog() {
  static const std::vector<AssetInfo> catalog = {
      {.name = "w43", .original_label = "f(5,3) witness",
       .layout = AssetLayout::kColumnsAsElements, .verbatim = kW43, .checksum = kW43Crc},
      {.name = "w63", .original_label = "f(6,3) witness",
       .layout = AssetLayout::kColumnsAsElements, .verbatim = kW63, .checksum = kW63Crc},
      {.name = "w54", .original_label = "f(5,4) witness",
       .layout = AssetLayout::kColumnsAsElements, .verbatim = kW54, .checksum = kW54Crc},
      {.name = "sa-19-4-20-4", .original_label = "SA(19;4,20,4)",
       .layout = AssetLayout::kRowsAsRows, .offset = 1, .q = 4, .strength = 4,
       .verbatim = kTable1, .checksum = kTable1Crc},
  };
  return catalog;
}

LoadedAsset load_asset(const AssetInfo& info, bool verify) {
  const std::string name(info.name);
  if (crc32(info.verbatim) != info.checksum) {
    throw IoError("asset " + name + ": checksum mismatch");
  }
  const auto matrix = parse_matrix(info);
  int max_symbol = 0;
  for (const auto& row : matrix) {
    max_symbol = std::max(max_symbol, *std::max_element(row.begin(), row.end()));
  }
  const int q = info.q > 0 ? info.q : max_symbol + 1;
  if (q < 2 || max_symbol >= q) throw IoError("asset " + name + ": symbols exceed alphabet");

  LoadedAsset loaded{.info = info};
  std::ostringstream receipt;
  receipt << name << " (originally labeled " << info.original_label << "): ";
  if (info.layout == AssetLayout::kColumnsAsElements) {
    const int n = static_cast<int>(matrix.size());
    const std::size_t columns = matrix.front().size();
    TupleSet set(n, q);
    for (std::size_t c = 0; c < columns; ++c) {
      std::vector<int> column(n);
      for (int r = 0; r < n; ++r) column[r] = matrix[r][c];
      set.insert(make_word(q, column));
    }
    receipt << columns << " columns read as words of Z_" << q << "^" << n
            << "; set n=" << n << " q=" << q << " size=" << set.size();
    if (verify) {
      const Verdict verdict = verify_skirting_set(set);
      loaded.verified = verdict.is_skirting;
      receipt << "; verify_skirting_set " << (verdict.is_skirting ? "passed" : "failed")
              << " over " << verdict.checked << " words";
    }
    loaded.set = std::move(set);
  } else {
    const int n = static_cast<int>(matrix.front().size());
    std::vector<Word> rows;
    for (const auto& row : matrix) rows.push_back(make_word(q, row));
    SkirtArray array(n, q, std::move(rows));
    receipt << "rows read as rows; array N=" << array.num_rows() << " n=" << n
            << " q=" << q << "; printed symbols s mapped to s-" << info.offset;
    if (verify) {
      const StrengthVerdict verdict = verify_array_strength(array, info.strength);
      loaded.verified = verdict.holds;
      receipt << "; strength " << info.strength << " "
              << (verdict.holds ? "certified" : "refuted");
    }
    loaded.array = std::move(array);
  }
  loaded.receipt = receipt.str();
  return loaded;
}

LoadedAsset load_asset(std::string_view name, bool verify) {
  for (const AssetInfo& info : asset_catalog()) {
    if (info.name == name) return load_asset(info, verify);
  }
  throw ParameterError("unknown asset '" + std::string(name) + "'");
}

std::vector<LoadedAsset> load_assets(bool verify) {
  std::vector<LoadedAsset> loaded;
  for (const AssetInfo& info : asset_catalog()) loaded.push_back(load_asset(info, verify));
  return loaded;
}

}  // namespace skirt

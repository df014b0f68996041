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

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace skirt {

// Fixed-size bitset sized at runtime. Bits past size() are always zero so
// that word-level popcounts are exact.
class Bitset {
 public:
  using Block = std::uint64_t;
  static constexpr std::size_t kBlockBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t bits)
      : size_(bits), blocks_((bits + kBlockBits - 1) / kBlockBits, 0) {}

  std::size_t size() const { return size_; }
  std::size_t num_blocks() const { return blocks_.size(); }

  bool test(std::size_t i) const {
    return (blocks_[i / kBlockBits] >> (i % kBlockBits)) & 1u;
  }
  void set(std::size_t i) { blocks_[i / kBlockBits] |= Block{1} << (i % kBlockBits); }
  void reset(std::size_t i) {
    blocks_[i / kBlockBits] &= ~(Block{1} << (i % kBlockBits));
  }
  void clear() { std::fill(blocks_.begin(), blocks_.end(), 0); }
  void set_all() {
    std::fill(blocks_.begin(), blocks_.end(), ~Block{0});
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Block b : blocks_) c += std::popcount(b);
    return c;
  }
  bool none() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](Block b) { return b == 0; });
  }

  // |*this & other|
  std::size_t count_and(const Bitset& other) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      c += std::popcount(blocks_[k] & other.blocks_[k]);
    }
    return c;
  }
  // *this &= ~other
  void subtract(const Bitset& other) {
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      blocks_[k] &= ~other.blocks_[k];
    }
  }
  Bitset& operator|=(const Bitset& other) {
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      blocks_[k] |= other.blocks_[k];
    }
    return *this;
  }

  // Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t k = from / kBlockBits;
    Block b = blocks_[k] & (~Block{0} << (from % kBlockBits));
    while (true) {
      if (b != 0) return k * kBlockBits + std::countr_zero(b);
      if (++k == blocks_.size()) return size_;
      b = blocks_[k];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  const std::vector<Block>& blocks() const { return blocks_; }
  std::vector<Block>& mutable_blocks() { return blocks_; }

  bool operator==(const Bitset&) const = default;

 private:
  void trim() {
    if (size_ % kBlockBits != 0 && !blocks_.empty()) {
      blocks_.back() &= (Block{1} << (size_ % kBlockBits)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<Block> blocks_;
};

}  // namespace skirt

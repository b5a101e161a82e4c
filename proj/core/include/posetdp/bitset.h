// Copyright 2026 The posetdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POSETDP_BITSET_H_
#define POSETDP_BITSET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace posetdp {

// Fixed-size bit set whose size is chosen at runtime. Used for closure matrix
// rows and for filters (upward-closed element sets).
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Bitset() = default;
  explicit Bitset(int size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  int size() const { return size_; }

  bool test(int i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(int i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(int i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void clear() {
    for (Word& w : words_) w = 0;
  }

  int count() const {
    int n = 0;
    for (Word w : words_) n += std::popcount(w);
    return n;
  }
  bool any() const {
    for (Word w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  bool Intersects(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & other.words_[k]) != 0) return true;
    }
    return false;
  }
  // True if every member of *this is a member of `other`.
  bool IsSubsetOf(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    }
    return true;
  }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  // Removes members of `other`.
  Bitset& Subtract(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  // Calls f(i) for every set bit in increasing order.
  template <typename F>
  void ForEach(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        f(static_cast<int>(k) * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  // Smallest set index, or -1 if empty.
  int First() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0) {
        return static_cast<int>(k) * kWordBits + std::countr_zero(words_[k]);
      }
    }
    return -1;
  }

  std::vector<int> ToIndices() const {
    std::vector<int> out;
    out.reserve(count());
    ForEach([&](int i) { out.push_back(i); });
    return out;
  }

  const std::vector<Word>& words() const { return words_; }
  std::vector<Word>& words() { return words_; }

 private:
  int size_ = 0;
  std::vector<Word> words_;
};

}  // namespace posetdp

#endif  // POSETDP_BITSET_H_

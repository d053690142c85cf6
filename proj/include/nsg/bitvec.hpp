#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "nsg/kernels.hpp"

namespace nsg {

/// Dynamic bit vector where bit position i stands for the integer i.
/// Backed by little-endian 64-bit words; bits at or above size() stay zero
/// so whole-word operations need no masking.
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(int nbits)
      : words_((static_cast<std::size_t>(nbits) + 63) / 64, 0), nbits_(nbits) {
    assert(nbits >= 0);
  }

  int size() const { return nbits_; }

  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
  }

  void set(int i) {
    assert(i >= 0 && i < nbits_);
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < nbits_);
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  void assign(int i, bool v) { v ? set(i) : reset(i); }

  int count() const {
    return static_cast<int>(
        kernels::active().popcount(words_.data(), words_.size()));
  }

  bool none() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

  /// Clears any bits at or above size() after raw word writes.
  void normalize() {
    const int tail = nbits_ & 63;
    if (tail != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

  /// Orders by the bit sequence b[0], b[1], ... with 0 before 1; the first
  /// differing position decides. Requires equal sizes.
  static int compare_lex(const BitVec& a, const BitVec& b) {
    assert(a.nbits_ == b.nbits_);
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      const std::uint64_t diff = a.words_[k] ^ b.words_[k];
      if (diff != 0) {
        const int p = std::countr_zero(diff);
        return (a.words_[k] >> p & 1) == 0 ? -1 : 1;
      }
    }
    return 0;
  }

  struct Hash {
    std::size_t operator()(const BitVec& v) const {
      std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(v.nbits_);
      for (std::uint64_t w : v.words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };

 private:
  std::vector<std::uint64_t> words_;
  int nbits_ = 0;
};

}  // namespace nsg

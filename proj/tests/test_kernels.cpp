#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "nsg/bitvec.hpp"
#include "nsg/kernels.hpp"
#include "support.hpp"

namespace {

// Independent check, written as the O(F^2) triple loop over pairs.
bool closed_naive(const std::vector<int>& x, int f) {
  for (int i = 1; i <= f; ++i) {
    for (int j = i; i + j <= f; ++j) {
      if (x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(j)] -
              x[static_cast<std::size_t>(i + j)] <
          0) {
        return false;
      }
    }
  }
  return true;
}

std::vector<int> coords_of_mask(std::uint32_t gaps, int f) {
  std::vector<int> x(static_cast<std::size_t>(f) + 1, 0);
  for (int i = 1; i <= f; ++i) x[static_cast<std::size_t>(i)] = gaps >> i & 1;
  return x;
}

}  // namespace

TEST_CASE("kernel variants are available and named") {
  const auto variants = nsg::kernels::all_available();
  REQUIRE(!variants.empty());
  CHECK(std::string(variants.front()->name) == "scalar");
  for (const auto* ops : variants) {
    CHECK(ops->bit_or != nullptr);
    CHECK(ops->closure_ok != nullptr);
  }
}

TEST_CASE("bitwise or/and/popcount agree across variants") {
  std::mt19937_64 rng(12345);
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3},
                        std::size_t{4}, std::size_t{7}, std::size_t{16},
                        std::size_t{101}}) {
    std::vector<std::uint64_t> a(n), b(n);
    for (auto& w : a) w = rng();
    for (auto& w : b) w = rng();

    std::vector<std::uint64_t> expect_or(n), expect_and(n);
    std::uint64_t expect_pop = 0;
    for (std::size_t k = 0; k < n; ++k) {
      expect_or[k] = a[k] | b[k];
      expect_and[k] = a[k] & b[k];
      expect_pop += static_cast<std::uint64_t>(__builtin_popcountll(a[k]));
    }

    for (const auto* ops : nsg::kernels::all_available()) {
      CAPTURE(ops->name);
      CAPTURE(n);
      std::vector<std::uint64_t> got(n);
      ops->bit_or(a.data(), b.data(), got.data(), n);
      CHECK(got == expect_or);
      ops->bit_and(a.data(), b.data(), got.data(), n);
      CHECK(got == expect_and);
      CHECK(ops->popcount(a.data(), n) == expect_pop);
    }
  }
}

TEST_CASE("single-word candidate check matches the triple loop exhaustively") {
  for (int f = 1; f <= 11; ++f) {
    const std::uint64_t candidates = std::uint64_t{1} << (f - 1);
    std::uint64_t valid_count = 0;
    std::uint32_t block[8];
    for (std::uint64_t c = 0; c < candidates; c += 8) {
      const int lanes = static_cast<int>(std::min<std::uint64_t>(8, candidates - c));
      for (int k = 0; k < 8; ++k) {
        const std::uint64_t cc = c + (k < lanes ? k : 0);
        std::uint32_t gaps = std::uint32_t{1} << f;
        for (int i = 1; i < f; ++i) {
          if (cc >> (i - 1) & 1) gaps |= std::uint32_t{1} << i;
        }
        block[k] = gaps;
      }
      std::uint32_t expect = 0;
      for (int k = 0; k < 8; ++k) {
        if (closed_naive(coords_of_mask(block[k], f), f)) expect |= 1u << k;
      }
      for (const auto* ops : nsg::kernels::all_available()) {
        CAPTURE(ops->name);
        CAPTURE(f);
        CHECK(ops->kunz_valid8(block, f) == expect);
      }
      for (int k = 0; k < lanes; ++k) valid_count += expect >> k & 1;
    }
    CHECK(valid_count >= 1);  // the all-gaps pattern is always valid
  }
}

TEST_CASE("single-word candidate check agrees on random wide candidates") {
  std::mt19937 rng(777);
  for (int f : {12, 17, 22, 27, 31}) {
    for (int round = 0; round < 64; ++round) {
      std::uint32_t block[8];
      for (auto& gaps : block) {
        gaps = rng() & (f >= 31 ? ~0u : (1u << (f + 1)) - 1u) & ~1u;
        gaps |= std::uint32_t{1} << f;
      }
      std::uint32_t expect = 0;
      for (int k = 0; k < 8; ++k) {
        if (closed_naive(coords_of_mask(block[k], f), f)) expect |= 1u << k;
      }
      for (const auto* ops : nsg::kernels::all_available()) {
        CAPTURE(ops->name);
        CAPTURE(f);
        CHECK(ops->kunz_valid8(block, f) == expect);
      }
    }
  }
}

TEST_CASE("multiword closure check agrees across variants and the triple loop") {
  std::mt19937_64 rng(4242);
  for (int f : {40, 63, 64, 65, 130, 257, 517}) {
    for (int round = 0; round < 24; ++round) {
      nsg::BitVec gaps(f + 1);
      // Biased density so both outcomes appear.
      const int keep = round % 3;
      for (int i = 1; i <= f; ++i) {
        if (static_cast<int>(rng() % 3) <= keep) gaps.set(i);
      }
      gaps.set(f);
      nsg::BitVec members(f + 1);
      for (int i = 1; i <= f; ++i) {
        if (!gaps.test(i)) members.set(i);
      }

      std::vector<int> x(static_cast<std::size_t>(f) + 1, 0);
      for (int i = 1; i <= f; ++i) x[static_cast<std::size_t>(i)] = gaps.test(i);
      const bool expect = closed_naive(x, f);

      for (const auto* ops : nsg::kernels::all_available()) {
        CAPTURE(ops->name);
        CAPTURE(f);
        CAPTURE(round);
        CHECK(ops->closure_ok(members.data(), gaps.data(), gaps.word_count(),
                              f) == expect);
      }
    }
  }
}

TEST_CASE("multiword closure shifts across word boundaries") {
  // Members at multiples of 64 exercise the zero-remainder shift path.
  const int f = 300;
  nsg::BitVec gaps(f + 1);
  for (int i = 1; i <= f; ++i) gaps.set(i);
  for (int m : {64, 128, 192}) gaps.reset(m);
  nsg::BitVec members(f + 1);
  for (int m : {64, 128, 192}) members.set(m);

  // 64 + 192 = 256 is a gap, so the complement is not closed.
  for (const auto* ops : nsg::kernels::all_available()) {
    CAPTURE(ops->name);
    CHECK_FALSE(
        ops->closure_ok(members.data(), gaps.data(), gaps.word_count(), f));
  }

  gaps.reset(256);
  members.set(256);
  // Now every pairwise sum either lands on a member or beyond F.
  for (const auto* ops : nsg::kernels::all_available()) {
    CAPTURE(ops->name);
    CHECK(ops->closure_ok(members.data(), gaps.data(), gaps.word_count(), f));
  }
}

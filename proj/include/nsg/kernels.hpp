#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nsg::kernels {

/// One implementation of the word-level primitives behind the bit-vector
/// arithmetic. Buffers are little-endian arrays of 64-bit words where bit
/// position i stands for the integer i. A scalar reference version always
/// exists; vector variants are selected at runtime and must be bit-exact
/// drop-ins (see tests/test_kernels.cpp for the equivalence suite).
struct Ops {
  const char* name;

  /// out[k] = a[k] | b[k] for k < nwords. Componentwise max on 0-1 vectors.
  void (*bit_or)(const std::uint64_t* a, const std::uint64_t* b,
                 std::uint64_t* out, std::size_t nwords);

  /// out[k] = a[k] & b[k] for k < nwords. Componentwise min on 0-1 vectors.
  void (*bit_and)(const std::uint64_t* a, const std::uint64_t* b,
                  std::uint64_t* out, std::size_t nwords);

  /// Total number of set bits in a[0..nwords).
  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t nwords);

  /// True when no two set positions i, j >= 1 of `members` satisfy
  /// i + j in `gaps`. Both buffers hold nwords words and carry no bits
  /// above position `limit`. Probing stops at 2*i > limit, which is
  /// complete because every violating pair has a summand <= limit/2.
  bool (*closure_ok)(const std::uint64_t* members, const std::uint64_t* gaps,
                     std::size_t nwords, int limit);

  /// Batch membership test for Kunz(F), F <= 31. gaps[k] packs candidate
  /// k's coordinates as bits 1..F with bit F set; bit 0 and bits above F
  /// are clear. Returns a mask whose bit k is set when the complement of
  /// gaps[k] within [1, F] is closed under addition below F+1.
  std::uint32_t (*kunz_valid8)(const std::uint32_t* gaps, int F);
};

/// Portable reference implementation.
const Ops& scalar();

/// AVX2 implementation, or nullptr when compiled out or the CPU lacks it.
const Ops* avx2();

/// Best available implementation. The NSG_KERNELS environment variable
/// ("scalar" or "avx2") forces a specific one; unsupported requests fall
/// back to scalar.
const Ops& active();

/// Every implementation usable on this machine (scalar first).
std::vector<const Ops*> all_available();

}  // namespace nsg::kernels

#include "nsg/kernels.hpp"

#include <bit>

namespace nsg::kernels {
namespace {

void bit_or_scalar(const std::uint64_t* a, const std::uint64_t* b,
                   std::uint64_t* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] | b[k];
}

void bit_and_scalar(const std::uint64_t* a, const std::uint64_t* b,
                    std::uint64_t* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] & b[k];
}

std::uint64_t popcount_scalar(const std::uint64_t* a, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < n; ++k) total += std::popcount(a[k]);
  return total;
}

// Tests ((members << shift) & gaps) != 0 over the shared word range.
bool shifted_hits(const std::uint64_t* members, const std::uint64_t* gaps,
                  std::size_t n, int shift) {
  const std::size_t w = static_cast<std::size_t>(shift) >> 6;
  const int r = shift & 63;
  if (w >= n) return false;
  if (r == 0) {
    for (std::size_t k = w; k < n; ++k) {
      if (members[k - w] & gaps[k]) return true;
    }
    return false;
  }
  if (members[0] << r & gaps[w]) return true;
  for (std::size_t k = w + 1; k < n; ++k) {
    const std::uint64_t sh =
        members[k - w] << r | members[k - w - 1] >> (64 - r);
    if (sh & gaps[k]) return true;
  }
  return false;
}

bool closure_ok_scalar(const std::uint64_t* members, const std::uint64_t* gaps,
                       std::size_t n, int limit) {
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t word = members[k];
    while (word != 0) {
      const int i = static_cast<int>(k << 6) + std::countr_zero(word);
      if (2 * i > limit) return true;
      if (i >= 1 && shifted_hits(members, gaps, n, i)) return false;
      word &= word - 1;
    }
  }
  return true;
}

bool candidate_ok_u32(std::uint32_t gaps, int F) {
  const std::uint32_t range =
      F >= 31 ? ~1u : (std::uint32_t{1} << (F + 1)) - 2;  // bits 1..F
  const std::uint32_t members = ~gaps & range;
  std::uint32_t probe = members;
  while (probe != 0) {
    const int i = std::countr_zero(probe);
    if (2 * i > F) break;
    if ((members << i) & gaps) return false;
    probe &= probe - 1;
  }
  return true;
}

std::uint32_t kunz_valid8_scalar(const std::uint32_t* gaps, int F) {
  std::uint32_t mask = 0;
  for (int k = 0; k < 8; ++k) {
    mask |= std::uint32_t{candidate_ok_u32(gaps[k], F)} << k;
  }
  return mask;
}

constexpr Ops scalar_ops = {
    "scalar",         bit_or_scalar,     bit_and_scalar,
    popcount_scalar,  closure_ok_scalar, kunz_valid8_scalar,
};

}  // namespace

const Ops& scalar() { return scalar_ops; }

}  // namespace nsg::kernels

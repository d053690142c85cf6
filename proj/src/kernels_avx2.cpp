// AVX2 variants of the word-level primitives. This translation unit is
// compiled with -mavx2 and is only reachable through the runtime dispatch
// in kernels.cpp, which checks CPU support first.

#include "nsg/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

namespace nsg::kernels {
namespace {

void bit_or_avx2(const std::uint64_t* a, const std::uint64_t* b,
                 std::uint64_t* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k),
                        _mm256_or_si256(va, vb));
  }
  for (; k < n; ++k) out[k] = a[k] | b[k];
}

void bit_and_avx2(const std::uint64_t* a, const std::uint64_t* b,
                  std::uint64_t* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k),
                        _mm256_and_si256(va, vb));
  }
  for (; k < n; ++k) out[k] = a[k] & b[k];
}

// Nibble-lookup population count, accumulated through psadbw.
std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t n) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                        _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  std::uint64_t lanes[4];
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; k < n; ++k) total += std::popcount(a[k]);
  return total;
}

bool shifted_hits_word(const std::uint64_t* members, const std::uint64_t* gaps,
                       std::size_t n, std::size_t k, std::size_t w, int r) {
  std::uint64_t sh = members[k - w] << r;
  if (r != 0 && k > w) sh |= members[k - w - 1] >> (64 - r);
  return (sh & gaps[k]) != 0;
}

// ((members << shift) & gaps) != 0, four words per step. The shifted operand
// is rebuilt from two unaligned loads, so word k = w is handled first.
bool shifted_hits_avx2(const std::uint64_t* members, const std::uint64_t* gaps,
                       std::size_t n, int shift) {
  const std::size_t w = static_cast<std::size_t>(shift) >> 6;
  const int r = shift & 63;
  if (w >= n) return false;
  if (shifted_hits_word(members, gaps, n, w, w, r)) return true;
  std::size_t k = w + 1;
  const __m128i rcnt = _mm_cvtsi32_si128(r);
  const __m128i lcnt = _mm_cvtsi32_si128(64 - r);
  for (; k + 4 <= n; k += 4) {
    const __m256i cur =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(members + k - w));
    __m256i sh = cur;
    if (r != 0) {
      const __m256i prev = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(members + k - w - 1));
      sh = _mm256_or_si256(_mm256_sll_epi64(cur, rcnt),
                           _mm256_srl_epi64(prev, lcnt));
    }
    const __m256i hit = _mm256_and_si256(
        sh, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gaps + k)));
    if (!_mm256_testz_si256(hit, hit)) return true;
  }
  for (; k < n; ++k) {
    if (shifted_hits_word(members, gaps, n, k, w, r)) return true;
  }
  return false;
}

bool closure_ok_avx2(const std::uint64_t* members, const std::uint64_t* gaps,
                     std::size_t n, int limit) {
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t word = members[k];
    while (word != 0) {
      const int i = static_cast<int>(k << 6) + std::countr_zero(word);
      if (2 * i > limit) return true;
      if (i >= 1 && shifted_hits_avx2(members, gaps, n, i)) return false;
      word &= word - 1;
    }
  }
  return true;
}

std::uint32_t kunz_valid8_avx2(const std::uint32_t* gaps, int F) {
  const std::uint32_t range =
      F >= 31 ? ~1u : (std::uint32_t{1} << (F + 1)) - 2;
  const __m256i g = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gaps));
  const __m256i m = _mm256_andnot_si256(g, _mm256_set1_epi32(static_cast<int>(range)));
  const __m256i zero = _mm256_setzero_si256();
  __m256i fail = zero;
  for (int i = 1; 2 * i <= F; ++i) {
    const __m256i bit = _mm256_set1_epi32(1 << i);
    const __m256i active = _mm256_cmpeq_epi32(_mm256_and_si256(m, bit), bit);
    const __m256i sums =
        _mm256_and_si256(_mm256_sll_epi32(m, _mm_cvtsi32_si128(i)), g);
    const __m256i viol =
        _mm256_andnot_si256(_mm256_cmpeq_epi32(sums, zero), active);
    fail = _mm256_or_si256(fail, viol);
    if (_mm256_movemask_ps(_mm256_castsi256_ps(fail)) == 0xff) break;
  }
  const int failed = _mm256_movemask_ps(_mm256_castsi256_ps(fail));
  return static_cast<std::uint32_t>(~failed) & 0xffu;
}

constexpr Ops avx2_table = {
    "avx2",        bit_or_avx2,     bit_and_avx2,
    popcount_avx2, closure_ok_avx2, kunz_valid8_avx2,
};

}  // namespace

namespace detail {
const Ops& avx2_ops() { return avx2_table; }
}  // namespace detail

}  // namespace nsg::kernels

#endif  // x86_64

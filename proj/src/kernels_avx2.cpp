#include "stabgem/kernels.hpp"

#if defined(STABGEM_HAVE_AVX2)

#include <immintrin.h>

namespace stabgem::kern::avx2 {

namespace {

constexpr std::size_t kLanes = 4;  // u64 lanes per __m256i

// Nibble-LUT popcount (Mula).  Returns 4 partial u64 sums in one vector.
inline __m256i popcnt256(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::uint64_t hsum64(__m256i acc) {
  alignas(32) std::uint64_t tmp[4];
  _mm256_store_si256((__m256i*)tmp, acc);
  return tmp[0] + tmp[1] + tmp[2] + tmp[3];
}

void xor_into(word* dst, const word* src, std::size_t nw) {
  std::size_t i = 0;
  for (; i + kLanes <= nw; i += kLanes) {
    __m256i d = _mm256_loadu_si256((const __m256i*)(dst + i));
    __m256i s = _mm256_loadu_si256((const __m256i*)(src + i));
    _mm256_storeu_si256((__m256i*)(dst + i), _mm256_xor_si256(d, s));
  }
  for (; i < nw; i++) dst[i] ^= src[i];
}

std::uint64_t popcount(const word* a, std::size_t nw) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= nw; i += kLanes)
    acc = _mm256_add_epi64(acc, popcnt256(_mm256_loadu_si256((const __m256i*)(a + i))));
  std::uint64_t c = hsum64(acc);
  for (; i < nw; i++) c += (std::uint64_t)__builtin_popcountll(a[i]);
  return c;
}

std::uint64_t and_popcount(const word* a, const word* b, std::size_t nw) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= nw; i += kLanes) {
    __m256i v = _mm256_and_si256(_mm256_loadu_si256((const __m256i*)(a + i)),
                                 _mm256_loadu_si256((const __m256i*)(b + i)));
    acc = _mm256_add_epi64(acc, popcnt256(v));
  }
  std::uint64_t c = hsum64(acc);
  for (; i < nw; i++) c += (std::uint64_t)__builtin_popcountll(a[i] & b[i]);
  return c;
}

std::uint64_t or_popcount(const word* a, const word* b, std::size_t nw) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= nw; i += kLanes) {
    __m256i v = _mm256_or_si256(_mm256_loadu_si256((const __m256i*)(a + i)),
                                _mm256_loadu_si256((const __m256i*)(b + i)));
    acc = _mm256_add_epi64(acc, popcnt256(v));
  }
  std::uint64_t c = hsum64(acc);
  for (; i < nw; i++) c += (std::uint64_t)__builtin_popcountll(a[i] | b[i]);
  return c;
}

bool andnot_any(const word* a, const word* b, std::size_t nw) {
  std::size_t i = 0;
  for (; i + kLanes <= nw; i += kLanes) {
    __m256i va = _mm256_loadu_si256((const __m256i*)(a + i));
    __m256i vb = _mm256_loadu_si256((const __m256i*)(b + i));
    // a & ~b  ==  andnot(b, a)
    if (!_mm256_testz_si256(_mm256_andnot_si256(vb, va), _mm256_andnot_si256(vb, va)))
      return true;
  }
  for (; i < nw; i++)
    if (a[i] & ~b[i]) return true;
  return false;
}

bool and_any(const word* a, const word* b, std::size_t nw) {
  std::size_t i = 0;
  for (; i + kLanes <= nw; i += kLanes) {
    __m256i va = _mm256_loadu_si256((const __m256i*)(a + i));
    __m256i vb = _mm256_loadu_si256((const __m256i*)(b + i));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; i < nw; i++)
    if (a[i] & b[i]) return true;
  return false;
}

bool is_zero(const word* a, std::size_t nw) {
  std::size_t i = 0;
  for (; i + kLanes <= nw; i += kLanes) {
    __m256i v = _mm256_loadu_si256((const __m256i*)(a + i));
    if (!_mm256_testz_si256(v, v)) return false;
  }
  for (; i < nw; i++)
    if (a[i]) return false;
  return true;
}

bool equal(const word* a, const word* b, std::size_t nw) {
  std::size_t i = 0;
  for (; i + kLanes <= nw; i += kLanes) {
    __m256i v = _mm256_xor_si256(_mm256_loadu_si256((const __m256i*)(a + i)),
                                 _mm256_loadu_si256((const __m256i*)(b + i)));
    if (!_mm256_testz_si256(v, v)) return false;
  }
  for (; i < nw; i++)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

bool supported() { return __builtin_cpu_supports("avx2") != 0; }

const Ops ops = {
    xor_into, popcount, and_popcount, or_popcount,
    andnot_any, and_any, is_zero, equal,
    "avx2",
};

}  // namespace stabgem::kern::avx2

#endif  // STABGEM_HAVE_AVX2

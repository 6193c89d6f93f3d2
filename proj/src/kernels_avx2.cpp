// Compiled with -mavx2; only reached after a runtime CPU feature check.

#include "kernels_impl.hpp"

#include <immintrin.h>

namespace wpo::kernels::detail {

namespace {

inline __m256i load8(const void* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store8(void* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

} // namespace

bool leq_avx2(const Count* a, const Count* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i va = load8(a + i);
    const __m256i vb = load8(b + i);
    // a <= b (unsigned) iff max(a, b) == b
    const __m256i ok = _mm256_cmpeq_epi32(_mm256_max_epu32(va, vb), vb);
    if (_mm256_movemask_epi8(ok) != -1)
      return false;
  }
  return leq_scalar(a + i, b + i, n - i);
}

void join_avx2(const Count* a, const Count* b, Count* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    store8(out + i, _mm256_max_epu32(load8(a + i), load8(b + i)));
  join_scalar(a + i, b + i, out + i, n - i);
}

void monus_avx2(const Count* a, const Delta* d, Count* out, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i va = load8(a + i);
    const __m256i vd = load8(d + i);
    // d >= 0: max(a, d) - d truncates at zero.
    const __m256i down = _mm256_sub_epi32(_mm256_max_epu32(va, vd), vd);
    // d < 0: a + |d|, saturating on unsigned wrap-around.
    const __m256i sum = _mm256_add_epi32(va, _mm256_sub_epi32(zero, vd));
    const __m256i wrapped = _mm256_cmpeq_epi32(_mm256_min_epu32(sum, va), sum);
    const __m256i up = _mm256_or_si256(sum, wrapped);
    const __m256i negative = _mm256_cmpgt_epi32(zero, vd);
    store8(out + i, _mm256_blendv_epi8(down, up, negative));
  }
  monus_scalar(a + i, d + i, out + i, n - i);
}

std::size_t find_letter_avx2(const Letter* s, std::size_t n, Letter x) {
  const __m256i needle = _mm256_set1_epi32(static_cast<int>(x));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i hit = _mm256_cmpeq_epi32(load8(s + i), needle);
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(hit));
    if (mask != 0)
      return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
  }
  return i + find_letter_scalar(s + i, n - i, x);
}

bool embeds_avx2(const Letter* u, std::size_t nu, const Letter* v,
                 std::size_t nv) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < nu; ++i) {
    if (nu - i > nv - pos)
      return false;
    const std::size_t hit = find_letter_avx2(v + pos, nv - pos, u[i]);
    if (hit == nv - pos)
      return false;
    pos += hit + 1;
  }
  return true;
}

} // namespace wpo::kernels::detail

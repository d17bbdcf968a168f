// Compiled with -mavx2; callers must check available(Variant::Avx2) first.

#include "dkp/kernels.hpp"

#if defined(DKP_KERNEL_AVX2)

#include <immintrin.h>

namespace dkp::kernels {

void relax_avx2(int64_t* dst, const int64_t* src, size_t n, int64_t add) {
  const __m256i vadd = _mm256_set1_epi64x(add);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i s = _mm256_add_epi64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)), vadd);
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    // AVX2 has no 64-bit max; DP values stay well below 2^62, so the signed
    // compare is safe.
    const __m256i take = _mm256_cmpgt_epi64(s, d);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_blendv_epi8(d, s, take));
  }
  for (; i < n; ++i) {
    const int64_t cand = src[i] + add;
    if (cand > dst[i]) dst[i] = cand;
  }
}

}  // namespace dkp::kernels

#endif  // DKP_KERNEL_AVX2

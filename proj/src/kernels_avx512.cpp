// Compiled with -mavx512f; callers must check available(Variant::Avx512) first.

#include "dkp/kernels.hpp"

#if defined(DKP_KERNEL_AVX512)

#include <immintrin.h>

namespace dkp::kernels {

void relax_avx512(int64_t* dst, const int64_t* src, size_t n, int64_t add) {
  const __m512i vadd = _mm512_set1_epi64(add);
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m512i s = _mm512_add_epi64(_mm512_loadu_si512(src + i), vadd);
    const __m512i d = _mm512_loadu_si512(dst + i);
    _mm512_storeu_si512(dst + i, _mm512_max_epi64(s, d));
  }
  for (; i < n; ++i) {
    const int64_t cand = src[i] + add;
    if (cand > dst[i]) dst[i] = cand;
  }
}

}  // namespace dkp::kernels

#endif  // DKP_KERNEL_AVX512

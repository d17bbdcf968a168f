#include "dkp/kernels.hpp"

#include <stdexcept>

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace dkp::kernels {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Auto: return "auto";
    case Variant::Scalar: return "scalar";
    case Variant::Avx2: return "avx2";
    case Variant::Avx512: return "avx512";
    case Variant::Neon: return "neon";
  }
  return "?";
}

void relax_scalar(int64_t* dst, const int64_t* src, size_t n, int64_t add) {
  for (size_t i = 0; i < n; ++i) {
    const int64_t cand = src[i] + add;
    if (cand > dst[i]) dst[i] = cand;
  }
}

#if defined(__aarch64__)
void relax_neon(int64_t* dst, const int64_t* src, size_t n, int64_t add) {
  const int64x2_t vadd = vdupq_n_s64(add);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const int64x2_t s = vaddq_s64(vld1q_s64(src + i), vadd);
    const int64x2_t d = vld1q_s64(dst + i);
    vst1q_s64(dst + i, vbslq_s64(vcgtq_s64(s, d), s, d));
  }
  for (; i < n; ++i) {
    const int64_t cand = src[i] + add;
    if (cand > dst[i]) dst[i] = cand;
  }
}
#endif

bool available(Variant v) {
  switch (v) {
    case Variant::Auto:
    case Variant::Scalar:
      return true;
    case Variant::Avx2:
#if defined(DKP_KERNEL_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Variant::Avx512:
#if defined(DKP_KERNEL_AVX512)
      return __builtin_cpu_supports("avx512f");
#else
      return false;
#endif
    case Variant::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Variant resolve(Variant v) {
  if (v != Variant::Auto) return v;
  if (available(Variant::Avx512)) return Variant::Avx512;
  if (available(Variant::Avx2)) return Variant::Avx2;
  if (available(Variant::Neon)) return Variant::Neon;
  return Variant::Scalar;
}

RelaxFn select(Variant v) {
  const Variant chosen = resolve(v);
  if (!available(chosen)) {
    throw std::invalid_argument(std::string("kernel variant not available: ") +
                                variant_name(chosen));
  }
  switch (chosen) {
    case Variant::Scalar:
      return relax_scalar;
#if defined(DKP_KERNEL_AVX2)
    case Variant::Avx2:
      return relax_avx2;
#endif
#if defined(DKP_KERNEL_AVX512)
    case Variant::Avx512:
      return relax_avx512;
#endif
#if defined(__aarch64__)
    case Variant::Neon:
      return relax_neon;
#endif
    default:
      return relax_scalar;
  }
}

}  // namespace dkp::kernels

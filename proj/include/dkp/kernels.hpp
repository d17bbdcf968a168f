#pragma once

#include <cstddef>
#include <cstdint>

namespace dkp::kernels {

/// The DP inner loop: dst[t] = max(dst[t], src[t] + add) for t in [0, n).
/// dst and src never alias (they are distinct DP rows).
using RelaxFn = void (*)(int64_t* dst, const int64_t* src, size_t n, int64_t add);

enum class Variant { Auto, Scalar, Avx2, Avx512, Neon };

const char* variant_name(Variant v);

/// Reference implementation; every vector variant must match it exactly.
void relax_scalar(int64_t* dst, const int64_t* src, size_t n, int64_t add);

#if defined(DKP_KERNEL_AVX2)
void relax_avx2(int64_t* dst, const int64_t* src, size_t n, int64_t add);
#endif
#if defined(DKP_KERNEL_AVX512)
void relax_avx512(int64_t* dst, const int64_t* src, size_t n, int64_t add);
#endif
#if defined(__aarch64__)
void relax_neon(int64_t* dst, const int64_t* src, size_t n, int64_t add);
#endif

/// True when the variant was compiled in and the running CPU supports it.
bool available(Variant v);

/// Resolves Auto to the widest supported variant.
Variant resolve(Variant v);

/// Kernel lookup; throws std::invalid_argument for unavailable variants.
RelaxFn select(Variant v = Variant::Auto);

}  // namespace dkp::kernels

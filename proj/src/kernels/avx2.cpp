// Compiled with -mavx2. Only reached through the dispatcher after a CPUID check.
#include <immintrin.h>

#include "iwkit/kernels.hpp"

namespace iwkit::kernels {
namespace {

constexpr double kTwo52 = 4503599627370496.0;
constexpr long long kTwo52Bits = 0x4330000000000000LL;

// Low 64 bits of a 64x64 product; AVX2 only multiplies 32-bit halves.
inline __m256i mullo64(__m256i a, __m256i b) {
  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i b_hi = _mm256_srli_epi64(b, 32);
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

// Exact for 0 <= x < 2^52.
inline __m256d to_double(__m256i x) {
  const __m256d biased = _mm256_castsi256_pd(_mm256_or_si256(x, _mm256_set1_epi64x(kTwo52Bits)));
  return _mm256_sub_pd(biased, _mm256_set1_pd(kTwo52));
}

// d integer valued in [0, 2^52).
inline __m256i to_u64(__m256d d) {
  const __m256d biased = _mm256_add_pd(d, _mm256_set1_pd(kTwo52));
  return _mm256_xor_si256(_mm256_castpd_si256(biased), _mm256_set1_epi64x(kTwo52Bits));
}

// a*w - q*m where q is floor(a*w/m) up to an error of one; result in [-m, 2m).
inline __m256i mulmod_lazy(__m256i a, __m256i w, __m256d w_over_m, __m256i m) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(to_double(a), w_over_m));
  return _mm256_sub_epi64(mullo64(a, w), mullo64(to_u64(q), m));
}

// Brings r from [-m, 3m) into [0, m).
inline __m256i normalize(__m256i r, __m256i m, __m256i m_minus_1) {
  const __m256i negative = _mm256_cmpgt_epi64(_mm256_setzero_si256(), r);
  r = _mm256_add_epi64(r, _mm256_and_si256(negative, m));
  r = _mm256_sub_epi64(r, _mm256_and_si256(_mm256_cmpgt_epi64(r, m_minus_1), m));
  r = _mm256_sub_epi64(r, _mm256_and_si256(_mm256_cmpgt_epi64(r, m_minus_1), m));
  return r;
}

}  // namespace

void axpy_mod_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                   std::uint64_t w, std::uint64_t m) noexcept {
  if (w == 0) return;
  const std::size_t n = dst.size();
  std::size_t i = 0;
  const __m256i vw = _mm256_set1_epi64x(static_cast<long long>(w));
  const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256i vm1 = _mm256_set1_epi64x(static_cast<long long>(m - 1));
  const __m256d w_over_m = _mm256_set1_pd(static_cast<double>(w) / static_cast<double>(m));
  for (; i + 4 <= n; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    const __m256i r = _mm256_add_epi64(mulmod_lazy(a, vw, w_over_m, vm), d);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), normalize(r, vm, vm1));
  }
  axpy_mod_scalar(dst.subspan(i), src.subspan(i), w, m);
}

void scale_mod_avx2(std::span<std::uint64_t> dst, std::uint64_t w, std::uint64_t m) noexcept {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  const __m256i vw = _mm256_set1_epi64x(static_cast<long long>(w));
  const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256i vm1 = _mm256_set1_epi64x(static_cast<long long>(m - 1));
  const __m256d w_over_m = _mm256_set1_pd(static_cast<double>(w) / static_cast<double>(m));
  for (; i + 4 <= n; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i),
                        normalize(mulmod_lazy(a, vw, w_over_m, vm), vm, vm1));
  }
  scale_mod_scalar(dst.subspan(i), w, m);
}

}  // namespace iwkit::kernels

#include "qspect/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define QSPECT_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define QSPECT_HAVE_AVX2_BUILD 0
#endif

namespace qspect::kernels {

#if QSPECT_HAVE_AVX2_BUILD

namespace {

// One quaternion per 256-bit lane: [q0, q1, q2, q3].

// Hamilton product p*q.  Each summand is a broadcast component of p
// times a signed permutation of q:
//   r0 = p0 q0 - p1 q1 - p2 q2 - p3 q3
//   r1 = p0 q1 + p1 q0 + p2 q3 - p3 q2
//   r2 = p0 q2 - p1 q3 + p2 q0 + p3 q1
//   r3 = p0 q3 + p1 q2 - p2 q1 + p3 q0
inline __m256d qmul4(__m256d p, __m256d q) {
  const __m256d s1 = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);   // (-,+,-,+)
  const __m256d s2 = _mm256_set_pd(-0.0, 0.0, 0.0, -0.0);   // (-,+,+,-)
  const __m256d s3 = _mm256_set_pd(0.0, 0.0, -0.0, -0.0);   // (-,-,+,+)
  __m256d r = _mm256_mul_pd(_mm256_permute4x64_pd(p, 0x00), q);
  r = _mm256_fmadd_pd(_mm256_permute4x64_pd(p, 0x55),
                      _mm256_xor_pd(_mm256_permute4x64_pd(q, 0xB1), s1), r);
  r = _mm256_fmadd_pd(_mm256_permute4x64_pd(p, 0xAA),
                      _mm256_xor_pd(_mm256_permute4x64_pd(q, 0x4E), s2), r);
  r = _mm256_fmadd_pd(_mm256_permute4x64_pd(p, 0xFF),
                      _mm256_xor_pd(_mm256_permute4x64_pd(q, 0x1B), s3), r);
  return r;
}

inline __m256d load_q(const Quaternion* p) {
  return _mm256_loadu_pd(&p->q0);
}

inline void store_q(Quaternion* p, __m256d v) { _mm256_storeu_pd(&p->q0, v); }

void axpy_left_avx2(const Quaternion& a, const Quaternion* x, Quaternion* y, std::size_t n) {
  const __m256d va = load_q(&a);
  for (std::size_t i = 0; i < n; ++i)
    store_q(y + i, _mm256_add_pd(load_q(y + i), qmul4(va, load_q(x + i))));
}

void axpy_right_avx2(const Quaternion& a, const Quaternion* x, Quaternion* y, std::size_t n) {
  const __m256d va = load_q(&a);
  for (std::size_t i = 0; i < n; ++i)
    store_q(y + i, _mm256_add_pd(load_q(y + i), qmul4(load_q(x + i), va)));
}

Quaternion dot_conj_avx2(const Quaternion* x, const Quaternion* y, std::size_t n) {
  const __m256d conj_mask = _mm256_set_pd(-0.0, -0.0, -0.0, 0.0);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n; ++i)
    acc = _mm256_add_pd(acc, qmul4(_mm256_xor_pd(load_q(x + i), conj_mask), load_q(y + i)));
  Quaternion out;
  store_q(&out, acc);
  return out;
}

Quaternion dot_mul_avx2(const Quaternion* x, const Quaternion* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n; ++i)
    acc = _mm256_add_pd(acc, qmul4(load_q(x + i), load_q(y + i)));
  Quaternion out;
  store_q(&out, acc);
  return out;
}

}  // namespace

const Ops* avx2_ops() {
  if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
  static const Ops ops{axpy_left_avx2, axpy_right_avx2, dot_conj_avx2, dot_mul_avx2, "avx2"};
  return &ops;
}

#else

const Ops* avx2_ops() { return nullptr; }

#endif

}  // namespace qspect::kernels

#pragma once

#include <cstddef>

#include "qspect/quaternion.hpp"

namespace qspect::kernels {

/// Batch quaternion kernels used by the vector/matrix inner loops.
///
/// Two implementations exist: a scalar reference and an AVX2 variant
/// (one quaternion per 256-bit lane).  The active table is picked once
/// at startup from CPUID; setting QSPECT_KERNEL=scalar in the
/// environment forces the reference path.  The test suite checks the
/// two against each other on random data.
struct Ops {
  // y[i] += a * x[i]
  void (*axpy_left)(const Quaternion& a, const Quaternion* x, Quaternion* y, std::size_t n);
  // y[i] += x[i] * a
  void (*axpy_right)(const Quaternion& a, const Quaternion* x, Quaternion* y, std::size_t n);
  // sum_i conj(x[i]) * y[i]
  Quaternion (*dot_conj)(const Quaternion* x, const Quaternion* y, std::size_t n);
  // sum_i x[i] * y[i]
  Quaternion (*dot_mul)(const Quaternion* x, const Quaternion* y, std::size_t n);
  const char* name;
};

const Ops& scalar_ops();

/// AVX2 table, or nullptr when unsupported by the CPU or the build.
const Ops* avx2_ops();

/// Runtime-selected table.
const Ops& active();

}  // namespace qspect::kernels

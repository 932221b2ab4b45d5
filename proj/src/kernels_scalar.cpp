#include "qspect/kernels.hpp"

namespace qspect::kernels {
namespace {

void axpy_left_scalar(const Quaternion& a, const Quaternion* x, Quaternion* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void axpy_right_scalar(const Quaternion& a, const Quaternion* x, Quaternion* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += x[i] * a;
}

Quaternion dot_conj_scalar(const Quaternion* x, const Quaternion* y, std::size_t n) {
  Quaternion acc;
  for (std::size_t i = 0; i < n; ++i) acc += x[i].conj() * y[i];
  return acc;
}

Quaternion dot_mul_scalar(const Quaternion* x, const Quaternion* y, std::size_t n) {
  Quaternion acc;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{axpy_left_scalar, axpy_right_scalar, dot_conj_scalar, dot_mul_scalar,
                       "scalar"};
  return ops;
}

}  // namespace qspect::kernels

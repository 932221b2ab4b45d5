#include <cstdlib>
#include <cstring>

#include "qspect/kernels.hpp"

namespace qspect::kernels {

const Ops& active() {
  static const Ops* selected = [] {
    const char* force = std::getenv("QSPECT_KERNEL");
    if (force && std::strcmp(force, "scalar") == 0) return &scalar_ops();
    if (const Ops* avx2 = avx2_ops()) return avx2;
    return &scalar_ops();
  }();
  return *selected;
}

}  // namespace qspect::kernels

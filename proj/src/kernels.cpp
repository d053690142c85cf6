#include "nsg/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace nsg::kernels {

#if defined(NSG_HAVE_AVX2)
namespace detail {
const Ops& avx2_ops();
}

const Ops* avx2() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_ops() : nullptr;
}
#else
const Ops* avx2() { return nullptr; }
#endif

const Ops& active() {
  static const Ops& chosen = []() -> const Ops& {
    if (const char* env = std::getenv("NSG_KERNELS")) {
      if (std::strcmp(env, "scalar") == 0) return scalar();
      if (std::strcmp(env, "avx2") == 0 && avx2() != nullptr) return *avx2();
    }
    if (const Ops* v = avx2()) return *v;
    return scalar();
  }();
  return chosen;
}

std::vector<const Ops*> all_available() {
  std::vector<const Ops*> out{&scalar()};
  if (const Ops* v = avx2()) out.push_back(v);
  return out;
}

}  // namespace nsg::kernels

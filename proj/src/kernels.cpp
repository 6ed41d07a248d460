#include "ew/kernels.hpp"

#include <cstdlib>
#include <string>

namespace ew::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool forced_scalar() {
  const char* env = std::getenv("EW_SIMD");
  return env != nullptr && std::string(env) == "scalar";
}

}  // namespace

bool available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return detail::avx2_table() != nullptr && cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (isa == Isa::Avx2 && available(Isa::Avx2)) {
    return *detail::avx2_table();
  }
  return detail::scalar_table();
}

const KernelTable& active() {
  static const KernelTable& chosen = forced_scalar() ? detail::scalar_table() : table(Isa::Avx2);
  return chosen;
}

std::string_view name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

}  // namespace ew::kernels

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"
#include "pm/kernels.hpp"

namespace pm::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelSet* pick() {
  const char* env = std::getenv("PM_KERNELS");
  if (env != nullptr && std::string_view(env) == "scalar") return &scalar();
  if (const KernelSet* v = avx2()) return v;
  return &scalar();
}

std::atomic<const KernelSet*>& current() {
  static std::atomic<const KernelSet*> set{pick()};
  return set;
}

}  // namespace

const KernelSet* avx2() {
  static const KernelSet* set = cpu_has_avx2() ? detail::avx2_compiled() : nullptr;
  return set;
}

const KernelSet& active() { return *current().load(std::memory_order_relaxed); }

void set_active(const KernelSet& set) { current().store(&set, std::memory_order_relaxed); }

}  // namespace pm::kernels

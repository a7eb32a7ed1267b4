#include "qconc/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace qconc::kernels {

#if !defined(QCONC_HAVE_AVX2)
const Backend* avx2_backend() { return nullptr; }
#endif

bool avx2_usable() {
  if (avx2_backend() == nullptr) return false;
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const Backend* detect_best() {
  return avx2_usable() ? avx2_backend() : &scalar_backend();
}

std::atomic<const Backend*>& active_slot() {
  static std::atomic<const Backend*> slot{nullptr};
  return slot;
}

}  // namespace

const Backend& active() {
  const Backend* b = active_slot().load(std::memory_order_acquire);
  if (b == nullptr) {
    b = detect_best();
    active_slot().store(b, std::memory_order_release);
  }
  return *b;
}

void select(std::string_view name) {
  if (name == "auto") {
    active_slot().store(detect_best(), std::memory_order_release);
  } else if (name == "scalar") {
    active_slot().store(&scalar_backend(), std::memory_order_release);
  } else if (name == "avx2") {
    if (!avx2_usable())
      throw std::runtime_error(
          "avx2 kernel backend is not usable on this machine");
    active_slot().store(avx2_backend(), std::memory_order_release);
  } else {
    throw std::invalid_argument("unknown kernel backend: " +
                                std::string(name));
  }
}

std::vector<std::string> usable_backends() {
  std::vector<std::string> names{"scalar"};
  if (avx2_usable()) names.emplace_back("avx2");
  return names;
}

}  // namespace qconc::kernels

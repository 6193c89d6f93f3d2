#include "kernels_impl.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace wpo::kernels {

namespace {

const Table kScalar{Backend::Scalar,          "scalar",
                    &detail::leq_scalar,      &detail::join_scalar,
                    &detail::monus_scalar,    &detail::find_letter_scalar,
                    &detail::embeds_scalar};

#ifdef WPO_HAVE_AVX2
const Table kAvx2{Backend::Avx2,          "avx2",
                  &detail::leq_avx2,      &detail::join_avx2,
                  &detail::monus_avx2,    &detail::find_letter_avx2,
                  &detail::embeds_avx2};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}
#endif

const Table* initial_table() {
  if (const char* env = std::getenv("WPO_KERNELS")) {
    Backend b{};
    if (parse_backend(env, b) && b == Backend::Scalar)
      return &kScalar;
  }
  if (const Table* t = avx2())
    return t;
  return &kScalar;
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{initial_table()};
  return table;
}

} // namespace

const Table& scalar() { return kScalar; }

const Table* avx2() {
#ifdef WPO_HAVE_AVX2
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

std::vector<const Table*> available() {
  std::vector<const Table*> out{&kScalar};
  if (const Table* t = avx2())
    out.push_back(t);
  return out;
}

const Table& active() { return *current().load(std::memory_order_relaxed); }

bool select(Backend backend) {
  const Table* t = backend == Backend::Scalar ? &kScalar : avx2();
  if (t == nullptr)
    return false;
  current().store(t, std::memory_order_relaxed);
  return true;
}

bool parse_backend(std::string_view name, Backend& out) {
  if (name == "scalar") {
    out = Backend::Scalar;
    return true;
  }
  if (name == "avx2") {
    out = Backend::Avx2;
    return true;
  }
  return false;
}

} // namespace wpo::kernels

#include "kernels_impl.hpp"

#include <algorithm>
#include <limits>

namespace wpo::kernels::detail {

bool leq_scalar(const Count* a, const Count* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

void join_scalar(const Count* a, const Count* b, Count* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::max(a[i], b[i]);
}

void monus_scalar(const Count* a, const Delta* d, Count* out, std::size_t n) {
  constexpr std::int64_t top = std::numeric_limits<Count>::max();
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t v = std::int64_t{a[i]} - std::int64_t{d[i]};
    out[i] = static_cast<Count>(std::clamp<std::int64_t>(v, 0, top));
  }
}

std::size_t find_letter_scalar(const Letter* s, std::size_t n, Letter x) {
  for (std::size_t i = 0; i < n; ++i)
    if (s[i] == x)
      return i;
  return n;
}

bool embeds_scalar(const Letter* u, std::size_t nu, const Letter* v,
                   std::size_t nv) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < nu; ++i) {
    if (nu - i > nv - pos)
      return false;
    const std::size_t hit = find_letter_scalar(v + pos, nv - pos, u[i]);
    if (hit == nv - pos)
      return false;
    pos += hit + 1;
  }
  return true;
}

} // namespace wpo::kernels::detail

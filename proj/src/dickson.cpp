#include "wpo/dickson.hpp"

#include "wpo/errors.hpp"

namespace wpo {

namespace {

void require_same(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionMismatch(a, b);
}

} // namespace

bool leq(const NatVec& a, const NatVec& b) {
  require_same(a.dim(), b.dim());
  return kernels::active().leq(a.data(), b.data(), a.dim());
}

NatVec join(const NatVec& a, const NatVec& b) {
  require_same(a.dim(), b.dim());
  NatVec out(a.dim());
  kernels::active().join(a.data(), b.data(), out.data(), a.dim());
  return out;
}

NatVec monus(const NatVec& a, std::span<const Delta> d) {
  require_same(a.dim(), d.size());
  NatVec out(a.dim());
  kernels::active().monus(a.data(), d.data(), out.data(), a.dim());
  return out;
}

std::vector<NatVec> box(std::size_t dim, Count bound) {
  std::vector<NatVec> out;
  NatVec cur(dim);
  while (true) {
    out.push_back(cur);
    std::size_t i = dim;
    while (i > 0 && cur[i - 1] == bound)
      cur[--i] = 0;
    if (i == 0)
      break;
    ++cur[i - 1];
  }
  return out;
}

std::string to_string(const NatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(v[i]);
  }
  s += ')';
  return s;
}

} // namespace wpo

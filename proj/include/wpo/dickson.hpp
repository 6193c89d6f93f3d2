#pragma once

// The componentwise (Dickson) order on N0^m.

#include "wpo/kernels.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace wpo {

// Element of N0^m. The dimension travels with the value and is checked at
// every binary operation.
class NatVec {
public:
  NatVec() = default;
  explicit NatVec(std::size_t dim) : c_(dim, 0) {}
  NatVec(std::initializer_list<Count> c) : c_(c) {}
  explicit NatVec(std::vector<Count> c) : c_(std::move(c)) {}

  std::size_t dim() const { return c_.size(); }
  Count operator[](std::size_t i) const { return c_[i]; }
  Count& operator[](std::size_t i) { return c_[i]; }
  std::span<const Count> components() const { return c_; }
  const Count* data() const { return c_.data(); }
  Count* data() { return c_.data(); }

  // Lexicographic; the canonical generator order within one dimension.
  friend auto operator<=>(const NatVec&, const NatVec&) = default;
  friend bool operator==(const NatVec&, const NatVec&) = default;

private:
  std::vector<Count> c_;
};

// Signed per-place effect, e.g. produce - consume of a transition.
using IntVec = std::vector<Delta>;

bool leq(const NatVec& a, const NatVec& b);
NatVec join(const NatVec& a, const NatVec& b);
NatVec monus(const NatVec& a, std::span<const Delta> d);

// Every vector in {0..bound}^dim in lexicographic order.
std::vector<NatVec> box(std::size_t dim, Count bound);

struct DicksonOrder {
  using value_type = NatVec;
  bool leq(const NatVec& a, const NatVec& b) const { return wpo::leq(a, b); }
};

std::string to_string(const NatVec& v);

} // namespace wpo

#pragma once

// Upward-closed sets, stored as the finite antichain of their minimal
// elements. Over a well partial order every upset has such a basis, and
// keeping it sorted makes set equality plain representation equality.

#include "wpo/dickson.hpp"
#include "wpo/order.hpp"
#include "wpo/words.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wpo {

template <PartialOrder O>
class UpSet {
public:
  using value_type = element_t<O>;
  using order_type = O;

  // The empty upset.
  UpSet() = default;
  explicit UpSet(O order) : order_(std::move(order)) {}

  // Drops every element lying above another one; the result generates the
  // same upward closure and its generators are its minimal elements.
  static UpSet normalize(std::vector<value_type> raw, O order = O{}) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    UpSet out(std::move(order));
    out.gens_.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < raw.size() && !dominated; ++j)
        dominated = j != i && out.order_.leq(raw[j], raw[i]);
      if (!dominated)
        out.gens_.push_back(raw[i]);
    }
    return out;
  }

  // Upset of everything: generated by the order's minimum.
  static UpSet full(value_type minimum, O order = O{}) {
    UpSet out(std::move(order));
    out.gens_.push_back(std::move(minimum));
    return out;
  }

  const std::vector<value_type>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const O& order() const { return order_; }

  friend bool operator==(const UpSet& a, const UpSet& b) {
    return a.gens_ == b.gens_;
  }

private:
  std::vector<value_type> gens_;
  [[no_unique_address]] O order_{};
};

using DicksonUpSet = UpSet<DicksonOrder>;
using WordUpSet = UpSet<EmbeddingOrder>;
using SupportUpSet = UpSet<SupportOrder>;
using LabeledUpSet = UpSet<LabeledOrder>;

template <PartialOrder O>
bool member(const element_t<O>& x, const UpSet<O>& set) {
  return std::any_of(set.generators().begin(), set.generators().end(),
                     [&](const auto& g) { return set.order().leq(g, x); });
}

// Decides inner ⊆ outer.
template <PartialOrder O>
bool includes(const UpSet<O>& outer, const UpSet<O>& inner) {
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const auto& g) { return member(g, outer); });
}

template <PartialOrder O>
UpSet<O> unite(const UpSet<O>& x, const UpSet<O>& y) {
  std::vector<element_t<O>> raw = x.generators();
  raw.insert(raw.end(), y.generators().begin(), y.generators().end());
  return UpSet<O>::normalize(std::move(raw), x.order());
}

DicksonUpSet intersect(const DicksonUpSet& x, const DicksonUpSet& y);

// N0 extended by a top element.
class ExtendedNat {
public:
  constexpr ExtendedNat() = default; // infinity
  constexpr explicit ExtendedNat(std::uint64_t v) : v_(v) {}
  static constexpr ExtendedNat infinity() { return {}; }

  bool finite() const { return v_.has_value(); }
  std::uint64_t value() const { return *v_; }

  friend bool operator==(const ExtendedNat&, const ExtendedNat&) = default;
  friend std::strong_ordering operator<=>(const ExtendedNat& a,
                                          const ExtendedNat& b) {
    if (a.finite() && b.finite())
      return *a.v_ <=> *b.v_;
    // finite < infinity
    return b.finite() <=> a.finite();
  }

private:
  std::optional<std::uint64_t> v_;
};

std::string to_string(const ExtendedNat& e);

// Least c with (prefix, c) in F, or infinity. prefix has dimension m - 1
// for an upset F of N0^m, m >= 2.
ExtendedNat phi_slice(const DicksonUpSet& F, const NatVec& prefix);

// a^{-1}X = { y | ay in X }. A generator g lies below ay iff g lies below
// y, or g = a g' with g' below y; so the tails of the a-headed generators
// are the only new minimal candidates.
WordUpSet quotient(Letter a, const WordUpSet& X);

// First letters of the minimal elements.
LetterSet som(const WordUpSet& X);

} // namespace wpo

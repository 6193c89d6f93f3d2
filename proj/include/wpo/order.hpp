#pragma once

// The PartialOrder concept plus order-generic sequence analyses.
// Every concrete order in the library models PartialOrder.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wpo {

template <class O>
concept PartialOrder = requires(const O& order,
                                const typename O::value_type& a,
                                const typename O::value_type& b) {
  typename O::value_type;
  { order.leq(a, b) } -> std::convertible_to<bool>;
};

template <PartialOrder O>
using element_t = typename O::value_type;

// (N0, <=); used for sequence analysis of plain numbers.
struct NaturalOrder {
  using value_type = std::uint64_t;
  bool leq(value_type a, value_type b) const { return a <= b; }
};

enum class PairClass { Equal, Less, Greater, Incomparable };

const char* to_string(PairClass c);

template <PartialOrder O>
PairClass classify(const element_t<O>& a, const element_t<O>& b,
                   const O& order) {
  const bool ab = order.leq(a, b);
  const bool ba = order.leq(b, a);
  if (ab && ba)
    return PairClass::Equal;
  if (ab)
    return PairClass::Less;
  if (ba)
    return PairClass::Greater;
  return PairClass::Incomparable;
}

struct GoodPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const GoodPair&, const GoodPair&) = default;
};

// A sequence is good iff some earlier element is <= a later one.
struct SequenceVerdict {
  std::optional<GoodPair> good_pair;
  bool bad() const { return !good_pair.has_value(); }
};

// Lexicographically smallest (i, j) with i < j and seq[i] <= seq[j].
template <PartialOrder O>
SequenceVerdict find_good_pair(std::span<const element_t<O>> seq,
                               const O& order) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (order.leq(seq[i], seq[j]))
        return {GoodPair{i, j}};
  return {};
}

template <PartialOrder O>
bool is_bad(std::span<const element_t<O>> seq, const O& order) {
  return find_good_pair(seq, order).bad();
}

// Listed in search priority order.
enum class Homogeneity { Constant, Descending, Ascending, Antichain };

const char* to_string(Homogeneity h);

struct HomogeneousSubsequence {
  std::vector<std::size_t> indices; // strictly increasing
  Homogeneity kind = Homogeneity::Constant;
};

namespace detail {

inline bool pair_has(PairClass c, Homogeneity h) {
  switch (h) {
  case Homogeneity::Constant:
    return c == PairClass::Equal;
  case Homogeneity::Descending:
    return c == PairClass::Greater;
  case Homogeneity::Ascending:
    return c == PairClass::Less;
  case Homogeneity::Antichain:
    return c == PairClass::Incomparable;
  }
  return false;
}

using ClassMatrix = std::vector<std::vector<PairClass>>;

// Constant, descending and ascending classes are transitive, so a chain of
// consecutive same-class pairs is homogeneous on all pairs. longest[i] is
// the longest such chain starting at i; the lexicographically smallest
// witness is then read off greedily.
inline std::optional<std::vector<std::size_t>>
transitive_witness(const ClassMatrix& cls, std::size_t k, Homogeneity h) {
  const std::size_t n = cls.size();
  std::vector<std::size_t> longest(n, 1);
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pair_has(cls[i][j], h) && longest[j] + 1 > longest[i])
        longest[i] = longest[j] + 1;

  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t need = k; need > 0; --need) {
    bool found = false;
    for (std::size_t j = next; j < n; ++j) {
      if (longest[j] < need)
        continue;
      if (!out.empty() && !pair_has(cls[out.back()][j], h))
        continue;
      out.push_back(j);
      next = j + 1;
      found = true;
      break;
    }
    if (!found)
      return std::nullopt;
  }
  return out;
}

// Incomparability is not transitive: depth-first clique search in index
// order, which yields the lexicographically smallest clique first.
inline bool antichain_search(const ClassMatrix& cls, std::size_t k,
                             std::vector<std::size_t>& chosen,
                             const std::vector<std::size_t>& candidates) {
  if (chosen.size() == k)
    return true;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (chosen.size() + (candidates.size() - c) < k)
      return false;
    const std::size_t pick = candidates[c];
    std::vector<std::size_t> rest;
    for (std::size_t d = c + 1; d < candidates.size(); ++d)
      if (cls[pick][candidates[d]] == PairClass::Incomparable)
        rest.push_back(candidates[d]);
    chosen.push_back(pick);
    if (antichain_search(cls, k, chosen, rest))
      return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace detail

// Finite counterpart of the infinite homogeneous-subsequence lemma: the
// first class (in Homogeneity order) admitting a length-k subsequence whose
// pairs all share that class, with its lexicographically smallest index
// list. Exhaustive; meant for short sequences.
template <PartialOrder O>
std::optional<HomogeneousSubsequence>
homogeneous_subsequence(std::span<const element_t<O>> seq, std::size_t k,
                        const O& order) {
  const std::size_t n = seq.size();
  if (k == 0 || k > n)
    return std::nullopt;

  detail::ClassMatrix cls(n, std::vector<PairClass>(n, PairClass::Equal));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      cls[i][j] = classify(seq[i], seq[j], order);

  for (Homogeneity h : {Homogeneity::Constant, Homogeneity::Descending,
                        Homogeneity::Ascending}) {
    if (auto idx = detail::transitive_witness(cls, k, h))
      return HomogeneousSubsequence{std::move(*idx), h};
  }

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i)
    all[i] = i;
  std::vector<std::size_t> chosen;
  if (detail::antichain_search(cls, k, chosen, all))
    return HomogeneousSubsequence{std::move(chosen), Homogeneity::Antichain};
  return std::nullopt;
}

// True iff every pair of the selected subsequence has the claimed class.
template <PartialOrder O>
bool verify_homogeneous(std::span<const element_t<O>> seq,
                        const HomogeneousSubsequence& sub, const O& order) {
  const auto& idx = sub.indices;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (idx[p] >= seq.size() || (p > 0 && idx[p - 1] >= idx[p]))
      return false;
    for (std::size_t q = p + 1; q < idx.size(); ++q)
      if (!detail::pair_has(classify(seq[idx[p]], seq[idx[q]], order),
                            sub.kind))
        return false;
  }
  return true;
}

} // namespace wpo

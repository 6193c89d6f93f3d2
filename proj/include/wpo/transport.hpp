#pragma once

// Quasi-embeddings f: (A, <=_A) -> (B, <=_B), i.e. maps with
// f(a1) <=_B f(a2) => a1 <=_A a2, and the induced map on upsets.

#include "wpo/upset.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wpo {

template <PartialOrder Source, PartialOrder Target>
struct QuasiEmbedding {
  using source_type = element_t<Source>;
  using target_type = element_t<Target>;

  std::string name;
  std::function<target_type(const source_type&)> map;
  Source source{};
  Target target{};

  target_type operator()(const source_type& x) const { return map(x); }
};

// (x1, ..., xm) -> 1^x1 2^x2 ... m^xm over an m-letter alphabet
// (letter i written as index i-1).
Word dickson_to_word(const NatVec& x);

// u -> (phi(u), S(u)).
LabeledWord word_to_labeled(const Word& u);

QuasiEmbedding<DicksonOrder, EmbeddingOrder> dickson_to_word_embedding();
QuasiEmbedding<SupportOrder, LabeledOrder> word_to_labeled_embedding();

template <class T>
struct EmbeddingCheck {
  bool ok = true;
  std::optional<std::pair<T, T>> counterexample;
  std::size_t pairs_checked = 0;
};

template <PartialOrder S, PartialOrder T>
EmbeddingCheck<element_t<S>> check_quasi_embedding(
    const QuasiEmbedding<S, T>& f,
    std::span<const std::pair<element_t<S>, element_t<S>>> sample) {
  EmbeddingCheck<element_t<S>> out;
  for (const auto& [a1, a2] : sample) {
    ++out.pairs_checked;
    if (f.target.leq(f(a1), f(a2)) && !f.source.leq(a1, a2)) {
      out.ok = false;
      out.counterexample = std::make_pair(a1, a2);
      return out;
    }
  }
  return out;
}

// Every ordered pair drawn from elements.
template <PartialOrder S, PartialOrder T>
EmbeddingCheck<element_t<S>>
check_quasi_embedding(const QuasiEmbedding<S, T>& f,
                      std::span<const element_t<S>> elements) {
  std::vector<element_t<T>> images;
  images.reserve(elements.size());
  for (const auto& e : elements)
    images.push_back(f(e));
  EmbeddingCheck<element_t<S>> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      ++out.pairs_checked;
      if (f.target.leq(images[i], images[j]) &&
          !f.source.leq(elements[i], elements[j])) {
        out.ok = false;
        out.counterexample = std::make_pair(elements[i], elements[j]);
        return out;
      }
    }
  }
  return out;
}

// a1 <= a2 => f(a1) <= f(a2) on every ordered pair drawn from elements.
template <PartialOrder S, PartialOrder T>
EmbeddingCheck<element_t<S>>
check_monotone(const QuasiEmbedding<S, T>& f,
               std::span<const element_t<S>> elements) {
  std::vector<element_t<T>> images;
  images.reserve(elements.size());
  for (const auto& e : elements)
    images.push_back(f(e));
  EmbeddingCheck<element_t<S>> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      ++out.pairs_checked;
      if (f.source.leq(elements[i], elements[j]) &&
          !f.target.leq(images[i], images[j])) {
        out.ok = false;
        out.counterexample = std::make_pair(elements[i], elements[j]);
        return out;
      }
    }
  }
  return out;
}

// The upset generated by f[X]. Only generator images are mapped, which is
// exact when f is monotone (both provided embeddings are).
template <PartialOrder S, PartialOrder T>
UpSet<T> transport_upset(const QuasiEmbedding<S, T>& f, const UpSet<S>& X) {
  std::vector<element_t<T>> images;
  images.reserve(X.size());
  for (const auto& g : X.generators())
    images.push_back(f(g));
  return UpSet<T>::normalize(std::move(images), f.target);
}

} // namespace wpo

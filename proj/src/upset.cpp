#include "wpo/upset.hpp"

#include "wpo/errors.hpp"

namespace wpo {

DicksonUpSet intersect(const DicksonUpSet& x, const DicksonUpSet& y) {
  std::vector<NatVec> raw;
  raw.reserve(x.size() * y.size());
  for (const NatVec& g : x.generators())
    for (const NatVec& h : y.generators())
      raw.push_back(join(g, h));
  return DicksonUpSet::normalize(std::move(raw));
}

std::string to_string(const ExtendedNat& e) {
  return e.finite() ? std::to_string(e.value()) : "inf";
}

ExtendedNat phi_slice(const DicksonUpSet& F, const NatVec& prefix) {
  ExtendedNat best = ExtendedNat::infinity();
  for (const NatVec& g : F.generators()) {
    if (g.dim() < 2)
      throw UsageError("phi_slice needs an upset of dimension >= 2");
    if (g.dim() != prefix.dim() + 1)
      throw DimensionMismatch(g.dim() - 1, prefix.dim());
    bool below = true;
    for (std::size_t i = 0; i < prefix.dim() && below; ++i)
      below = g[i] <= prefix[i];
    if (below)
      best = std::min(best, ExtendedNat(g[prefix.dim()]));
  }
  return best;
}

WordUpSet quotient(Letter a, const WordUpSet& X) {
  if (X.empty())
    return X;
  const std::size_t k = X.generators().front().alphabet_size();
  if (a >= k)
    throw UsageError("letter index " + std::to_string(a) +
                     " outside alphabet of size " + std::to_string(k));
  std::vector<Word> raw = X.generators();
  for (const Word& g : X.generators())
    if (!g.empty() && g[0] == a)
      raw.push_back(g.tail());
  return WordUpSet::normalize(std::move(raw));
}

LetterSet som(const WordUpSet& X) {
  LetterSet s;
  for (const Word& g : X.generators())
    if (!g.empty())
      s.push_back(g[0]);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

} // namespace wpo

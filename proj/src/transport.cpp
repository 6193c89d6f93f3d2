#include "wpo/transport.hpp"

#include "wpo/errors.hpp"

namespace wpo {

Word dickson_to_word(const NatVec& x) {
  if (x.dim() == 0)
    throw UsageError("dickson_to_word needs dimension >= 1");
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < x.dim(); ++i)
    letters.insert(letters.end(), x[i], static_cast<Letter>(i));
  return Word(x.dim(), std::move(letters));
}

LabeledWord word_to_labeled(const Word& u) { return phi(u); }

QuasiEmbedding<DicksonOrder, EmbeddingOrder> dickson_to_word_embedding() {
  return {"dickson-to-word", &dickson_to_word, {}, {}};
}

QuasiEmbedding<SupportOrder, LabeledOrder> word_to_labeled_embedding() {
  return {"word-to-labeled", &word_to_labeled, {}, {}};
}

} // namespace wpo

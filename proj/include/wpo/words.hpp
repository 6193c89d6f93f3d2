#pragma once

// Words over a finite alphabet with Higman's embedding order leq_e.
// leq_E additionally compares letter supports via the flagging transform phi.

#include "wpo/kernels.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wpo {

// Letters are indices 0..size-1. Display names, when present, are single
// distinct characters so that words can be written by juxtaposition.
class Alphabet {
public:
  explicit Alphabet(std::size_t size);
  explicit Alphabet(std::string names);

  // "a", "b", ... "z".
  static Alphabet latin();
  // "1".."m" for m <= 9, unnamed beyond that.
  static Alphabet digits(std::size_t m);

  std::size_t size() const { return size_; }
  bool named() const { return !names_.empty(); }
  const std::string& names() const { return names_; }
  char name(Letter l) const { return names_[l]; }
  std::optional<Letter> find(char c) const;

  // The alphabet A x {0,1}, letter (a, flag) encoded as 2a + flag.
  std::size_t doubled_size() const { return 2 * size_; }

private:
  std::size_t size_;
  std::string names_;
};

class Word {
public:
  Word() = default;
  Word(std::size_t alphabet_size, std::vector<Letter> letters);
  Word(std::size_t alphabet_size, std::initializer_list<Letter> letters)
      : Word(alphabet_size, std::vector<Letter>(letters)) {}

  std::size_t alphabet_size() const { return k_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  // The word without its first letter; requires !empty().
  Word tail() const;
  Word prepend(Letter a) const;

  friend bool operator==(const Word&, const Word&) = default;
  // Length first, then lexicographic; the canonical generator order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
  std::size_t k_ = 1;
  std::vector<Letter> letters_;
};

// Sorted, duplicate-free set of letters.
using LetterSet = std::vector<Letter>;

struct LabeledWord {
  Word word;          // over the doubled alphabet
  LetterSet support;  // letters of the base alphabet

  friend bool operator==(const LabeledWord&, const LabeledWord&) = default;
  friend std::strong_ordering operator<=>(const LabeledWord& a,
                                          const LabeledWord& b);
};

constexpr Letter doubled_letter(Letter a, bool repeat) {
  return 2 * a + (repeat ? 1 : 0);
}
constexpr Letter base_letter(Letter b) { return b / 2; }
constexpr bool is_repeat(Letter b) { return (b & 1u) != 0; }

// u embeds into v: u is obtained from v by deleting letters.
bool leq_e(const Word& u, const Word& v);
LabeledWord phi(const Word& u);
LetterSet support(const Word& u);
bool leq_E(const Word& u, const Word& v);

struct EmbeddingOrder {
  using value_type = Word;
  bool leq(const Word& u, const Word& v) const { return leq_e(u, v); }
};

struct SupportOrder {
  using value_type = Word;
  bool leq(const Word& u, const Word& v) const { return leq_E(u, v); }
};

// Product order on B* x P(A): (u, S) <= (v, T) iff u <=_e v and S = T.
struct LabeledOrder {
  using value_type = LabeledWord;
  bool leq(const LabeledWord& a, const LabeledWord& b) const;
};

// All words over a k-letter alphabet of length <= max_len, canonical order.
std::vector<Word> all_words(std::size_t k, std::size_t max_len);

std::string to_string(const Word& w, const Alphabet& alphabet);
std::string to_string(const LetterSet& s, const Alphabet& alphabet);
// Base alphabet is used for display: "[(a,0)(b,0)(a,1)] {a,b}".
std::string to_string(const LabeledWord& w, const Alphabet& base);

} // namespace wpo

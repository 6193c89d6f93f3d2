#include "wpo/words.hpp"

#include "wpo/errors.hpp"

#include <algorithm>

namespace wpo {

namespace {

void require_same_alphabet(const Word& u, const Word& v) {
  if (u.alphabet_size() != v.alphabet_size())
    throw AlphabetMismatch(u.alphabet_size(), v.alphabet_size());
}

bool reserved_name(char c) {
  return c == '(' || c == ')' || c == '[' || c == ']' || c == '{' ||
         c == '}' || c == ',' || c == '#' ||
         static_cast<unsigned char>(c) <= ' ' ||
         static_cast<unsigned char>(c) >= 0x7f;
}

std::string letter_name(Letter l, const Alphabet& a) {
  if (a.named() && l < a.size())
    return std::string(1, a.name(l));
  return std::to_string(l);
}

} // namespace

Alphabet::Alphabet(std::size_t size) : size_(size) {
  if (size_ == 0)
    throw UsageError("alphabet must have at least one letter");
}

Alphabet::Alphabet(std::string names) : size_(names.size()), names_(names) {
  if (size_ == 0)
    throw UsageError("alphabet must have at least one letter");
  std::string seen;
  for (char c : names_) {
    if (reserved_name(c))
      throw UsageError(std::string("invalid letter name '") + c + "'");
    if (seen.find(c) != std::string::npos)
      throw UsageError(std::string("duplicate letter name '") + c + "'");
    seen += c;
  }
}

Alphabet Alphabet::latin() { return Alphabet("abcdefghijklmnopqrstuvwxyz"); }

Alphabet Alphabet::digits(std::size_t m) {
  if (m >= 1 && m <= 9)
    return Alphabet(std::string("123456789").substr(0, m));
  return Alphabet(m);
}

std::optional<Letter> Alphabet::find(char c) const {
  const auto pos = names_.find(c);
  if (pos == std::string::npos)
    return std::nullopt;
  return static_cast<Letter>(pos);
}

Word::Word(std::size_t alphabet_size, std::vector<Letter> letters)
    : k_(alphabet_size), letters_(std::move(letters)) {
  if (k_ == 0)
    throw UsageError("alphabet must have at least one letter");
  for (Letter l : letters_)
    if (l >= k_)
      throw UsageError("letter index " + std::to_string(l) +
                       " outside alphabet of size " + std::to_string(k_));
}

Word Word::tail() const {
  Word w;
  w.k_ = k_;
  w.letters_.assign(letters_.begin() + 1, letters_.end());
  return w;
}

Word Word::prepend(Letter a) const {
  std::vector<Letter> l;
  l.reserve(letters_.size() + 1);
  l.push_back(a);
  l.insert(l.end(), letters_.begin(), letters_.end());
  return Word(k_, std::move(l));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.k_ <=> b.k_; c != 0)
    return c;
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0)
    return c;
  return a.letters_ <=> b.letters_;
}

std::strong_ordering operator<=>(const LabeledWord& a, const LabeledWord& b) {
  if (auto c = a.word <=> b.word; c != 0)
    return c;
  if (auto c = a.support.size() <=> b.support.size(); c != 0)
    return c;
  return a.support <=> b.support;
}

bool leq_e(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  const auto lu = u.letters();
  const auto lv = v.letters();
  return kernels::active().embeds(lu.data(), lu.size(), lv.data(), lv.size());
}

LabeledWord phi(const Word& u) {
  std::vector<bool> seen(u.alphabet_size(), false);
  std::vector<Letter> out;
  out.reserve(u.size());
  for (Letter l : u.letters()) {
    out.push_back(doubled_letter(l, seen[l]));
    seen[l] = true;
  }
  LetterSet s;
  for (Letter l = 0; l < seen.size(); ++l)
    if (seen[l])
      s.push_back(l);
  return {Word(2 * u.alphabet_size(), std::move(out)), std::move(s)};
}

LetterSet support(const Word& u) {
  LetterSet s(u.letters().begin(), u.letters().end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool leq_E(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  if (support(u) != support(v))
    return false;
  return leq_e(phi(u).word, phi(v).word);
}

bool LabeledOrder::leq(const LabeledWord& a, const LabeledWord& b) const {
  return a.support == b.support && leq_e(a.word, b.word);
}

std::vector<Word> all_words(std::size_t k, std::size_t max_len) {
  std::vector<Word> out{Word(k, {})};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter a = 0; a < k; ++a) {
        std::vector<Letter> l(out[i].letters().begin(), out[i].letters().end());
        l.push_back(a);
        out.emplace_back(k, std::move(l));
      }
    }
    begin = end;
  }
  return out;
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty())
    return "ε";
  if (alphabet.named() && alphabet.size() >= w.alphabet_size()) {
    std::string s;
    for (Letter l : w.letters())
      s += alphabet.name(l);
    return s;
  }
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(w[i]);
  }
  s += ']';
  return s;
}

std::string to_string(const LetterSet& set, const Alphabet& alphabet) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i)
      s += ',';
    s += letter_name(set[i], alphabet);
  }
  s += '}';
  return s;
}

std::string to_string(const LabeledWord& w, const Alphabet& base) {
  std::string s = "[";
  for (Letter b : w.word.letters()) {
    s += '(';
    s += letter_name(base_letter(b), base);
    s += is_repeat(b) ? ",1)" : ",0)";
  }
  s += "] ";
  s += to_string(w.support, base);
  return s;
}

} // namespace wpo

#include "wpo/text.hpp"

#include "wpo/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>

namespace wpo::text {

namespace {

constexpr std::string_view kEpsilon = "ε";

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

template <class Int>
Int parse_int(std::string_view s, std::size_t line, std::size_t column) {
  Int v{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec == std::errc::result_out_of_range)
    throw ParseError("number out of range: '" + std::string(s) + "'", line,
                     column);
  if (ec != std::errc{} || ptr != end || s.empty())
    throw ParseError("expected a natural number, got '" + std::string(s) + "'",
                     line, column);
  return v;
}

// Splits the interior of "(...)" or "[...]" on commas; reports columns.
struct Field {
  std::string_view text;
  std::size_t column;
};

std::vector<Field> split_group(std::string_view s, char open, char close,
                               std::size_t line, std::size_t column) {
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw ParseError(std::string("expected '") + open + "...'" + close + "'",
                     line, column);
  std::vector<Field> out;
  std::size_t start = 1;
  const std::size_t stop = s.size() - 1;
  auto trimmed = [&](std::size_t b, std::size_t e) {
    while (b < e && is_space(s[b]))
      ++b;
    while (e > b && is_space(s[e - 1]))
      --e;
    return Field{s.substr(b, e - b), column + b};
  };
  for (std::size_t i = 1; i <= stop; ++i) {
    if (i == stop || s[i] == ',') {
      out.push_back(trimmed(start, i));
      start = i + 1;
    }
  }
  if (out.size() == 1 && out.front().text.empty())
    out.clear();
  for (const Field& f : out)
    if (f.text.empty())
      throw ParseError("empty component", line, f.column);
  return out;
}

} // namespace

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < input.size(); ++k, ++i) {
      if (input[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < input.size()) {
    const char c = input[i];
    if (is_space(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < input.size() && input[i] != '\n')
        advance(1);
      continue;
    }
    Token t{{}, line, col};
    if (c == '{' || c == '}') {
      t.text = std::string(1, c);
      advance(1);
    } else if (c == '(' || c == '[') {
      const char close = c == '(' ? ')' : ']';
      const std::size_t end = input.find(close, i);
      const std::size_t nl = input.find('\n', i);
      if (end == std::string_view::npos || (nl != std::string_view::npos && nl < end))
        throw ParseError(std::string("unterminated '") + c + "'", line, col);
      t.text = std::string(input.substr(i, end + 1 - i));
      advance(end + 1 - i);
    } else {
      const std::size_t start = i;
      while (i < input.size() && !is_space(input[i]) && input[i] != '{' &&
             input[i] != '}' && input[i] != '#' && input[i] != '(' &&
             input[i] != '[')
        advance(1);
      t.text = std::string(input.substr(start, i - start));
    }
    out.push_back(std::move(t));
  }
  return out;
}

NatVec parse_natvec(std::string_view s, std::size_t line, std::size_t column) {
  const auto fields = split_group(s, '(', ')', line, column);
  if (fields.empty())
    throw ParseError("a vector needs at least one component", line, column);
  std::vector<Count> c;
  c.reserve(fields.size());
  for (const Field& f : fields)
    c.push_back(parse_int<Count>(f.text, line, f.column));
  return NatVec(std::move(c));
}

Word parse_word(std::string_view s, const Alphabet& alphabet, std::size_t line,
                std::size_t column) {
  const std::size_t k = alphabet.size();
  if (s == kEpsilon)
    return Word(k, {});
  if (!s.empty() && s.front() == '[') {
    std::vector<Letter> letters;
    for (const Field& f : split_group(s, '[', ']', line, column)) {
      const auto l = parse_int<Letter>(f.text, line, f.column);
      if (l >= k)
        throw ParseError("letter index " + std::to_string(l) +
                             " outside alphabet of size " + std::to_string(k),
                         line, f.column);
      letters.push_back(l);
    }
    return Word(k, std::move(letters));
  }
  if (s.empty())
    throw ParseError("empty word must be written as ε or []", line, column);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto l = alphabet.find(s[i]);
    if (!l)
      throw ParseError(std::string("letter '") + s[i] +
                           "' is not in the alphabet",
                       line, column + i);
    letters.push_back(*l);
  }
  return Word(k, std::move(letters));
}

LetterSet parse_letter_set(std::string_view s, const Alphabet& alphabet) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("expected '{...}'", 1, 1);
  LetterSet out;
  std::string_view body = s.substr(1, s.size() - 2);
  std::size_t start = 0;
  while (start <= body.size() && !body.empty()) {
    std::size_t end = body.find(',', start);
    if (end == std::string_view::npos)
      end = body.size();
    const std::string_view item = body.substr(start, end - start);
    const std::size_t col = start + 2;
    if (item.size() == 1 && alphabet.named()) {
      const auto l = alphabet.find(item[0]);
      if (!l)
        throw ParseError("letter '" + std::string(item) +
                             "' is not in the alphabet",
                         1, col);
      out.push_back(*l);
    } else {
      const auto l = parse_int<Letter>(item, 1, col);
      if (l >= alphabet.size())
        throw ParseError("letter index " + std::to_string(l) +
                             " outside alphabet of size " +
                             std::to_string(alphabet.size()),
                         1, col);
      out.push_back(l);
    }
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExtendedNat parse_extended_nat(std::string_view s) {
  if (s == "inf")
    return ExtendedNat::infinity();
  return ExtendedNat(parse_int<std::uint64_t>(s, 1, 1));
}

bool looks_like_vector(const Token& t) {
  return !t.text.empty() && t.text.front() == '(';
}

bool UpsetBlock::dickson() const {
  return !items.empty() && looks_like_vector(items.front());
}

UpsetBlock parse_upset_block(std::string_view input) {
  const auto tokens = tokenize(input);
  std::size_t i = 0;
  auto expect_more = [&](const char* what) {
    if (i >= tokens.size()) {
      const std::size_t line = tokens.empty() ? 1 : tokens.back().line;
      const std::size_t col = tokens.empty() ? 1 : tokens.back().column;
      throw ParseError(std::string("unexpected end of input, expected ") + what,
                       line, col);
    }
  };
  expect_more("'upset'");
  if (tokens[i].text != "upset")
    throw ParseError("expected 'upset', got '" + tokens[i].text + "'",
                     tokens[i].line, tokens[i].column);
  ++i;
  UpsetBlock block;
  expect_more("'{'");
  if (tokens[i].text != "{")
    block.name = tokens[i++].text;
  expect_more("'{'");
  if (tokens[i].text != "{")
    throw ParseError("expected '{', got '" + tokens[i].text + "'",
                     tokens[i].line, tokens[i].column);
  ++i;
  while (true) {
    expect_more("'}'");
    if (tokens[i].text == "}")
      break;
    if (tokens[i].text == "{")
      throw ParseError("unexpected '{'", tokens[i].line, tokens[i].column);
    block.items.push_back(tokens[i++]);
  }
  ++i;
  if (i < tokens.size())
    throw ParseError("trailing input after upset block", tokens[i].line,
                     tokens[i].column);
  return block;
}

DicksonUpSet to_dickson_upset(const UpsetBlock& block) {
  std::vector<NatVec> gens;
  for (const Token& t : block.items) {
    if (!looks_like_vector(t))
      throw ParseError("expected a vector, got '" + t.text + "'", t.line,
                       t.column);
    gens.push_back(parse_natvec(t.text, t.line, t.column));
    if (gens.back().dim() != gens.front().dim())
      throw ParseError("dimension mismatch: " + t.text + " has " +
                           std::to_string(gens.back().dim()) +
                           " components, expected " +
                           std::to_string(gens.front().dim()),
                       t.line, t.column);
  }
  return DicksonUpSet::normalize(std::move(gens));
}

WordUpSet to_word_upset(const UpsetBlock& block, const Alphabet& alphabet) {
  std::vector<Word> gens;
  for (const Token& t : block.items) {
    if (looks_like_vector(t))
      throw ParseError("expected a word, got '" + t.text + "'", t.line,
                       t.column);
    gens.push_back(parse_word(t.text, alphabet, t.line, t.column));
  }
  return WordUpSet::normalize(std::move(gens));
}

namespace {

std::string block(std::string_view name, const std::vector<std::string>& items) {
  std::string s = "upset ";
  if (!name.empty()) {
    s += name;
    s += ' ';
  }
  s += '{';
  for (const std::string& item : items) {
    s += ' ';
    s += item;
  }
  s += " }";
  return s;
}

} // namespace

std::string format_upset(const DicksonUpSet& X, std::string_view name) {
  std::vector<std::string> items;
  for (const NatVec& g : X.generators())
    items.push_back(to_string(g));
  return block(name, items);
}

std::string format_upset(const WordUpSet& X, const Alphabet& alphabet,
                         std::string_view name) {
  std::vector<std::string> items;
  for (const Word& g : X.generators())
    items.push_back(to_string(g, alphabet));
  return block(name, items);
}

CoverQuery parse_net(std::string_view input) {
  const auto tokens = tokenize(input);
  std::map<std::size_t, std::vector<Token>> lines;
  for (const Token& t : tokens)
    lines[t.line].push_back(t);

  std::optional<Vas> net;
  std::optional<NatVec> initial;
  std::optional<NatVec> target;

  auto vector_arg = [&](const Token& t) {
    NatVec v = parse_natvec(t.text, t.line, t.column);
    if (v.dim() != net->places())
      throw ParseError("dimension mismatch: " + t.text + " has " +
                           std::to_string(v.dim()) + " components, net has " +
                           std::to_string(net->places()) + " places",
                       t.line, t.column);
    return v;
  };
  auto need_net = [&](const Token& t) {
    if (!net)
      throw ParseError("'" + t.text + "' before 'places'", t.line, t.column);
  };
  auto arity = [&](const std::vector<Token>& ts, std::size_t n,
                   const char* usage) {
    if (ts.size() != n)
      throw ParseError(std::string("expected '") + usage + "'", ts[0].line,
                       ts.size() > n ? ts[n].column : ts.back().column);
  };

  for (const auto& [lineno, ts] : lines) {
    const Token& kw = ts[0];
    if (kw.text == "places") {
      arity(ts, 2, "places <count>");
      if (net)
        throw ParseError("duplicate 'places'", kw.line, kw.column);
      const auto m = parse_int<std::size_t>(ts[1].text, ts[1].line, ts[1].column);
      if (m == 0)
        throw ParseError("a net needs at least one place", ts[1].line,
                         ts[1].column);
      net.emplace(m);
    } else if (kw.text == "transition") {
      need_net(kw);
      arity(ts, 6, "transition <name> consume (...) produce (...)");
      if (ts[2].text != "consume")
        throw ParseError("expected 'consume'", ts[2].line, ts[2].column);
      if (ts[4].text != "produce")
        throw ParseError("expected 'produce'", ts[4].line, ts[4].column);
      for (const Transition& t : net->transitions())
        if (t.name == ts[1].text)
          throw ParseError("duplicate transition '" + ts[1].text + "'",
                           ts[1].line, ts[1].column);
      try {
        net->add({ts[1].text, vector_arg(ts[3]), vector_arg(ts[5])});
      } catch (const UsageError& e) {
        throw ParseError(e.what(), kw.line, kw.column);
      }
    } else if (kw.text == "initial" || kw.text == "target") {
      need_net(kw);
      arity(ts, 2, kw.text == "initial" ? "initial (...)" : "target (...)");
      auto& slot = kw.text == "initial" ? initial : target;
      if (slot)
        throw ParseError("duplicate '" + kw.text + "'", kw.line, kw.column);
      slot = vector_arg(ts[1]);
    } else {
      throw ParseError("unknown directive '" + kw.text + "'", kw.line,
                       kw.column);
    }
  }

  const std::size_t last = tokens.empty() ? 1 : tokens.back().line;
  if (!net)
    throw ParseError("missing 'places'", last, 1);
  if (!initial)
    throw ParseError("missing 'initial'", last, 1);
  if (!target)
    throw ParseError("missing 'target'", last, 1);
  return CoverQuery{std::move(*net), std::move(*initial), std::move(*target)};
}

std::string format_net(const CoverQuery& q) {
  std::string s = "places " + std::to_string(q.net.places()) + "\n";
  for (const Transition& t : q.net.transitions())
    s += "transition " + t.name + " consume " + to_string(t.consume) +
         " produce " + to_string(t.produce) + "\n";
  s += "initial " + to_string(q.initial) + "\n";
  s += "target " + to_string(q.target) + "\n";
  return s;
}

} // namespace wpo::text

#include "wpo/errors.hpp"
#include "wpo/text.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace wpo;

TEST_CASE("vectors") {
  CHECK(text::parse_natvec("(1,2,0)") == NatVec{1, 2, 0});
  CHECK(text::parse_natvec("( 3 , 4 )") == NatVec{3, 4});
  CHECK_THROWS_AS(text::parse_natvec("()"), ParseError);
  CHECK_THROWS_AS(text::parse_natvec("(1,,2)"), ParseError);
  CHECK_THROWS_AS(text::parse_natvec("(1,-2)"), ParseError);
  CHECK_THROWS_AS(text::parse_natvec("(99999999999)"), ParseError);
  CHECK_THROWS_AS(text::parse_natvec("1,2"), ParseError);
  try {
    text::parse_natvec("(1,x)", 4, 10);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 13);
  }
}

TEST_CASE("words") {
  const Alphabet abc("abc");
  CHECK(text::parse_word("aabbca", abc) == Word(3, {0, 0, 1, 1, 2, 0}));
  CHECK(text::parse_word("[0,0,1,1,2,0]", abc) == Word(3, {0, 0, 1, 1, 2, 0}));
  CHECK(text::parse_word("ε", abc).empty());
  CHECK(text::parse_word("[]", abc).empty());
  CHECK_THROWS_AS(text::parse_word("abd", abc), ParseError);
  CHECK_THROWS_AS(text::parse_word("[3]", abc), ParseError);
  try {
    text::parse_word("abz", abc, 2, 5);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
}

TEST_CASE("upset blocks") {
  const auto b = text::parse_upset_block("upset F {\n  (1,2)\n  (3,0) # corner\n}\n");
  CHECK(b.name == "F");
  CHECK(b.dickson());
  REQUIRE(b.items.size() == 2);
  CHECK(b.items[1].line == 3);
  CHECK(b.items[1].column == 3);
  const auto F = text::to_dickson_upset(b);
  CHECK(text::format_upset(F, "F") == "upset F { (1,2) (3,0) }");

  const Alphabet ab("ab");
  const auto X = text::to_word_upset(text::parse_upset_block("upset X { ab ba aba }"), ab);
  CHECK(text::format_upset(X, ab) == "upset { ab ba }");
  CHECK(text::format_upset(DicksonUpSet{}) == "upset { }");
  CHECK(text::parse_upset_block("upset { }").items.empty());

  CHECK_THROWS_AS(text::parse_upset_block("upset F (1,2) }"), ParseError);
  CHECK_THROWS_AS(text::parse_upset_block("upset F { (1,2)"), ParseError);
  CHECK_THROWS_AS(text::parse_upset_block("set F { }"), ParseError);
  CHECK_THROWS_AS(text::parse_upset_block("upset F { } extra"), ParseError);
  CHECK_THROWS_AS(text::to_dickson_upset(text::parse_upset_block("upset { (1,2) (1) }")),
                  ParseError);
  CHECK_THROWS_AS(text::to_dickson_upset(text::parse_upset_block("upset { (1,2) ab }")),
                  ParseError);
}

TEST_CASE("formatted upsets parse back to the same value") {
  std::mt19937_64 rng(1);
  const Alphabet ab("ab");
  for (int trial = 0; trial < 100; ++trial) {
    const auto D = DicksonUpSet::normalize(oracle::random_vectors(rng, 3, 6, 5));
    CHECK(text::to_dickson_upset(text::parse_upset_block(text::format_upset(D))) == D);
    const auto W = WordUpSet::normalize(oracle::random_words(rng, 2, 5, 5));
    CHECK(text::to_word_upset(text::parse_upset_block(text::format_upset(W, ab)), ab) == W);
  }
}

TEST_CASE("letter sets and extended naturals") {
  const Alphabet abc("abc");
  CHECK(text::parse_letter_set("{a,c}", abc) == LetterSet{0, 2});
  CHECK(text::parse_letter_set("{}", abc).empty());
  CHECK(to_string(text::parse_letter_set("{c,a}", abc), abc) == "{a,c}");
  CHECK_THROWS_AS(text::parse_letter_set("{d}", abc), ParseError);
  CHECK(text::parse_extended_nat("inf") == ExtendedNat::infinity());
  CHECK(text::parse_extended_nat("12") == ExtendedNat(12));
}

TEST_CASE("net files") {
  const char* src =
      "# demo\n"
      "places 2\n"
      "transition t1 consume (1,0) produce (0,1)\n"
      "initial (2,0)\n"
      "target (0,2)\n";
  const CoverQuery q = text::parse_net(src);
  CHECK(q.net.places() == 2);
  REQUIRE(q.net.transitions().size() == 1);
  CHECK(q.net.transitions()[0].name == "t1");
  CHECK(q.initial == NatVec{2, 0});
  CHECK(q.target == NatVec{0, 2});
  CHECK(text::format_net(q) == std::string(src).substr(7));
  const CoverQuery again = text::parse_net(text::format_net(q));
  CHECK(text::format_net(again) == text::format_net(q));

  auto fails_at = [](const char* s, std::size_t line, std::size_t col) {
    try {
      text::parse_net(s);
      return false;
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == col);
      return true;
    }
  };
  CHECK(fails_at("places 2\ninitial (1)\ntarget (0,0)\n", 2, 9));
  CHECK(fails_at("transition t consume (1) produce (1)\n", 1, 1));
  CHECK(fails_at("places 2\nfoo\n", 2, 1));
  CHECK(fails_at("places 2\ninitial (0,0)\n", 2, 1));
  CHECK(fails_at("places 1\ntransition t consume (1) make (1)\ninitial (0)\ntarget (0)\n",
                 2, 26));
  CHECK(fails_at("places 2\ninitial (0,0\n", 2, 9));
}

#pragma once

// Line-oriented text formats.
//
//   vector     (1,2,0)
//   word       aabbca | [0,0,1] | ε | []
//   upset      upset F { (1,2) (3,0) }     one block per file, may span lines
//   sequence   whitespace-separated vectors or words
//   net        places 2
//              transition t1 consume (1,0) produce (0,1)
//              initial (2,0)
//              target (0,2)
//
// '#' starts a comment running to the end of the line. Parse failures throw
// ParseError carrying a 1-based line and column.

#include "wpo/coverability.hpp"
#include "wpo/upset.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wpo::text {

struct Token {
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

// Splits on whitespace, keeping "(...)" and "[...]" groups whole and
// emitting '{' and '}' as tokens of their own. Comments are dropped.
std::vector<Token> tokenize(std::string_view input);

NatVec parse_natvec(std::string_view s, std::size_t line = 1,
                    std::size_t column = 1);
Word parse_word(std::string_view s, const Alphabet& alphabet,
                std::size_t line = 1, std::size_t column = 1);
LetterSet parse_letter_set(std::string_view s, const Alphabet& alphabet);
ExtendedNat parse_extended_nat(std::string_view s);

// True when the token spells a vector rather than a word.
bool looks_like_vector(const Token& t);

struct UpsetBlock {
  std::string name;
  std::vector<Token> items;
  bool dickson() const;
};

UpsetBlock parse_upset_block(std::string_view input);
DicksonUpSet to_dickson_upset(const UpsetBlock& block);
WordUpSet to_word_upset(const UpsetBlock& block, const Alphabet& alphabet);

std::string format_upset(const DicksonUpSet& X, std::string_view name = {});
std::string format_upset(const WordUpSet& X, const Alphabet& alphabet,
                         std::string_view name = {});

CoverQuery parse_net(std::string_view input);
std::string format_net(const CoverQuery& q);

} // namespace wpo::text

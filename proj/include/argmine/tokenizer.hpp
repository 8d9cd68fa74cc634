#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "argmine/corpus_model.hpp"

namespace argmine {

struct Token {
  std::string text;  // UTF-8
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

// Word inventory used for every per-word label in the toolkit.
//
// Whitespace separates chunks. Within a chunk, leading and trailing
// punctuation marks are peeled off one character per token, and the
// remaining core is split on "/" with the slash kept as its own token.
// A leading "@" or "#" directly followed by a word character is not peeled,
// so handles and hashtags stay whole.
std::vector<Token> tokenize(std::u32string_view text);
std::vector<Token> tokenize(std::string_view utf8_text);

// One flag per token: set when the token shares at least one character with
// any fragment of the span. Throws BoundsError if the span ends past
// `text_length`.
std::vector<bool> span_to_token_mask(const Span& span, const std::vector<Token>& tokens,
                                     std::size_t text_length);

}  // namespace argmine

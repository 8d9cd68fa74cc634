#include "argmine/tokenizer.hpp"

#include "argmine/errors.hpp"
#include "argmine/utf8.hpp"

namespace argmine {
namespace {

bool peelable(std::u32string_view text, std::size_t pos, std::size_t chunk_end) {
  const char32_t c = text[pos];
  if (!utf8::is_punct(c)) return false;
  if ((c == U'@' || c == U'#') && pos + 1 < chunk_end && utf8::is_word(text[pos + 1])) {
    return false;
  }
  return true;
}

void emit(std::u32string_view text, std::size_t start, std::size_t end, std::vector<Token>& out) {
  out.push_back(Token{utf8::encode(text.substr(start, end - start)), start, end});
}

void split_chunk(std::u32string_view text, std::size_t begin, std::size_t end,
                 std::vector<Token>& out) {
  std::size_t core_begin = begin;
  while (core_begin < end && peelable(text, core_begin, end)) {
    emit(text, core_begin, core_begin + 1, out);
    ++core_begin;
  }
  std::size_t core_end = end;
  while (core_end > core_begin && utf8::is_punct(text[core_end - 1])) --core_end;

  std::size_t part = core_begin;
  for (std::size_t i = core_begin; i < core_end; ++i) {
    if (text[i] == U'/') {
      if (i > part) emit(text, part, i, out);
      emit(text, i, i + 1, out);
      part = i + 1;
    }
  }
  if (core_end > part) emit(text, part, core_end, out);

  for (std::size_t i = core_end; i < end; ++i) emit(text, i, i + 1, out);
}

}  // namespace

std::vector<Token> tokenize(std::u32string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && utf8::is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !utf8::is_space(text[i])) ++i;
    if (i > start) split_chunk(text, start, i, tokens);
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view utf8_text) {
  const auto cps = utf8::decode(utf8_text);
  return tokenize(std::u32string_view(cps));
}

std::vector<bool> span_to_token_mask(const Span& span, const std::vector<Token>& tokens,
                                     std::size_t text_length) {
  if (span.end() > text_length) {
    throw BoundsError("span ends at " + std::to_string(span.end()) + " but text has " +
                      std::to_string(text_length) + " characters");
  }
  std::vector<bool> mask(tokens.size(), false);
  const auto& fragments = span.fragments();
  std::size_t f = 0;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    while (f < fragments.size() && fragments[f].end <= tokens[t].start) ++f;
    for (std::size_t k = f; k < fragments.size() && fragments[k].start < tokens[t].end; ++k) {
      if (fragments[k].overlaps(tokens[t].start, tokens[t].end)) {
        mask[t] = true;
        break;
      }
    }
  }
  return mask;
}

}  // namespace argmine

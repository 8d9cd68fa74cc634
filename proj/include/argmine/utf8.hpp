#pragma once

#include <string>
#include <string_view>

// All character offsets in the toolkit count Unicode code points, not bytes.
namespace argmine::utf8 {

// Throws ParseError("INVALID_UTF8") on malformed input.
std::u32string decode(std::string_view bytes);
std::string encode(std::u32string_view code_points);
std::string encode(char32_t cp);

std::size_t length(std::string_view bytes);

// Code-point classification covering ASCII, Latin-1 and Latin Extended-A,
// which is what English and Spanish tweets need.
bool is_space(char32_t c);
bool is_punct(char32_t c);
bool is_letter(char32_t c);
bool is_upper(char32_t c);
bool is_lower(char32_t c);
bool is_digit(char32_t c);
// letters, digits, underscore
bool is_word(char32_t c);
char32_t to_lower(char32_t c);
std::u32string to_lower(std::u32string_view s);

}  // namespace argmine::utf8

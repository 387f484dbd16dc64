#pragma once

#include <string>
#include <vector>

namespace emph::text {

// Decodes UTF-8; invalid byte sequences become U+FFFD.
std::vector<char32_t> decode_utf8(const std::string& s);

// Character classes over code points. Covers ASCII plus the common
// Latin-1/Latin-Extended, Greek and Cyrillic blocks and the usual
// punctuation/symbol blocks; slide text rarely strays further.
bool is_upper(char32_t c);
bool is_lower(char32_t c);
bool is_alpha(char32_t c);
bool is_digit(char32_t c);
bool is_punct(char32_t c);  // punctuation or symbol
bool is_open_bracket(char32_t c);
bool is_close_bracket(char32_t c);

char32_t to_lower(char32_t c);
std::string lower_ascii(const std::string& s);

}  // namespace emph::text

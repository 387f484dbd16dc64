#include "emph/text.hpp"

namespace emph::text {

std::vector<char32_t> decode_utf8(const std::string& s) {
  std::vector<char32_t> out;
  std::size_t i = 0;
  const auto n = s.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0xFFFD;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0 && i + 1 < n && (s[i + 1] & 0xC0) == 0x80) {
      cp = static_cast<char32_t>((b0 & 0x1F) << 6 | (s[i + 1] & 0x3F));
      len = 2;
      if (cp < 0x80) cp = 0xFFFD;
    } else if ((b0 & 0xF0) == 0xE0 && i + 2 < n && (s[i + 1] & 0xC0) == 0x80 &&
               (s[i + 2] & 0xC0) == 0x80) {
      cp = static_cast<char32_t>((b0 & 0x0F) << 12 | (s[i + 1] & 0x3F) << 6 | (s[i + 2] & 0x3F));
      len = 3;
      if (cp < 0x800) cp = 0xFFFD;
    } else if ((b0 & 0xF8) == 0xF0 && i + 3 < n && (s[i + 1] & 0xC0) == 0x80 &&
               (s[i + 2] & 0xC0) == 0x80 && (s[i + 3] & 0xC0) == 0x80) {
      cp = static_cast<char32_t>((b0 & 0x07) << 18 | (s[i + 1] & 0x3F) << 12 |
                                 (s[i + 2] & 0x3F) << 6 | (s[i + 3] & 0x3F));
      len = 4;
      if (cp < 0x10000 || cp > 0x10FFFF) cp = 0xFFFD;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

namespace {
struct Range {
  char32_t lo, hi;
};

constexpr Range kUpper[] = {
    {U'A', U'Z'},       {0x00C0, 0x00D6}, {0x00D8, 0x00DE},  // Latin-1
    {0x0391, 0x03A9},                                        // Greek
    {0x0400, 0x042F},                                        // Cyrillic (incl. Ѐ..Џ)
};

constexpr Range kLower[] = {
    {U'a', U'z'},       {0x00DF, 0x00F6}, {0x00F8, 0x00FF},
    {0x03B1, 0x03C9},
    {0x0430, 0x045F},
};

constexpr Range kDigit[] = {
    {U'0', U'9'},
    {0x0660, 0x0669},  // Arabic-Indic
    {0x06F0, 0x06F9},  // Extended Arabic-Indic
    {0x0966, 0x096F},  // Devanagari
    {0xFF10, 0xFF19},  // fullwidth
};

constexpr Range kPunct[] = {
    {0x0021, 0x002F}, {0x003A, 0x0040}, {0x005B, 0x0060}, {0x007B, 0x007E},  // ASCII
    {0x00A1, 0x00BF},                                                        // Latin-1 punct/symbols
    {0x2000, 0x206F},  // general punctuation (includes • U+2022, dashes, quotes)
    {0x2190, 0x21FF},  // arrows
    {0x2200, 0x22FF},  // math operators
    {0x2500, 0x25FF},  // box drawing / geometric shapes
    {0x2600, 0x27BF},  // misc symbols, dingbats
    {0x3000, 0x303F},  // CJK punctuation
    {0xFF01, 0xFF0F}, {0xFF1A, 0xFF20}, {0xFF3B, 0xFF40}, {0xFF5B, 0xFF65},
};

bool in_ranges(char32_t c, const Range* ranges, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (c >= ranges[i].lo && c <= ranges[i].hi) return true;
  return false;
}
}  // namespace

bool is_upper(char32_t c) { return in_ranges(c, kUpper, std::size(kUpper)); }
bool is_lower(char32_t c) { return in_ranges(c, kLower, std::size(kLower)); }
bool is_alpha(char32_t c) { return is_upper(c) || is_lower(c); }
bool is_digit(char32_t c) { return in_ranges(c, kDigit, std::size(kDigit)); }
bool is_punct(char32_t c) { return in_ranges(c, kPunct, std::size(kPunct)); }

bool is_open_bracket(char32_t c) { return c == U'(' || c == U'[' || c == U'{'; }
bool is_close_bracket(char32_t c) { return c == U')' || c == U']' || c == U'}'; }

char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return c + 32;
  if (c >= 0x0391 && c <= 0x03A9) return c + 32;
  if (c >= 0x0410 && c <= 0x042F) return c + 32;
  return c;
}

std::string lower_ascii(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
  return out;
}

}  // namespace emph::text

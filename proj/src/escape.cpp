#include "escape.h"

namespace ctxpath {

void appendUtf8(std::uint32_t cp, std::string& out) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool decodeEscape(std::string_view s, std::size_t& i, std::string& out) {
  if (i + 1 >= s.size() || s[i] != '\\') return false;
  char c = s[i + 1];
  switch (c) {
    case 't': out += '\t'; i += 2; return true;
    case 'b': out += '\b'; i += 2; return true;
    case 'n': out += '\n'; i += 2; return true;
    case 'r': out += '\r'; i += 2; return true;
    case 'f': out += '\f'; i += 2; return true;
    case '"': out += '"'; i += 2; return true;
    case '\'': out += '\''; i += 2; return true;
    case '\\': out += '\\'; i += 2; return true;
    case 'u':
    case 'U': {
      std::size_t n = c == 'u' ? 4 : 8;
      if (i + 2 + n > s.size()) return false;
      std::uint32_t cp = 0;
      for (std::size_t k = 0; k < n; ++k) {
        char h = s[i + 2 + k];
        cp <<= 4;
        if (h >= '0' && h <= '9') cp |= h - '0';
        else if (h >= 'a' && h <= 'f') cp |= h - 'a' + 10;
        else if (h >= 'A' && h <= 'F') cp |= h - 'A' + 10;
        else return false;
      }
      if (cp > 0x10FFFF) return false;
      appendUtf8(cp, out);
      i += 2 + n;
      return true;
    }
    default:
      return false;
  }
}

}  // namespace ctxpath

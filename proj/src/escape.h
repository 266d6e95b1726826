#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ctxpath {

void appendUtf8(std::uint32_t cp, std::string& out);

// Decodes the escape sequence whose backslash is at s[i]. On success appends
// the decoded text, advances i past the sequence and returns true.
bool decodeEscape(std::string_view s, std::size_t& i, std::string& out);

}  // namespace ctxpath

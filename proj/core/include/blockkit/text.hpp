#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace blockkit {

// Uppercases ASCII letters and the Latin-1 supplement block encoded as UTF-8
// (two-byte sequences 0xC3 0xA0..0xBE except the division sign), which covers
// the umlauts and accented letters that occur in Germanic name data. Other
// bytes pass through unchanged.
std::string to_upper_utf8(std::string_view s);

// Byte offsets of UTF-8 code point starts, with a trailing s.size() entry.
// Malformed continuation bytes are treated as single-byte code points.
std::vector<uint32_t> utf8_offsets(std::string_view s);

// First code point of s as a byte span; empty view for empty input.
std::string_view first_code_point(std::string_view s);

}  // namespace blockkit

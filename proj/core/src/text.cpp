#include "blockkit/text.hpp"

namespace blockkit {

std::string to_upper_utf8(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c >= 'a' && c <= 'z') {
            out.push_back(static_cast<char>(c - 'a' + 'A'));
        } else if (c == 0xC3 && i + 1 < s.size()) {
            unsigned char d = static_cast<unsigned char>(s[i + 1]);
            // U+00E0..U+00FE lowercase block, skipping U+00F7 (division sign).
            if (d >= 0xA0 && d <= 0xBE && d != 0xB7) {
                out.push_back(static_cast<char>(0xC3));
                out.push_back(static_cast<char>(d - 0x20));
                ++i;
            } else {
                out.push_back(static_cast<char>(c));
            }
        } else {
            out.push_back(static_cast<char>(c));
        }
    }
    return out;
}

std::vector<uint32_t> utf8_offsets(std::string_view s) {
    std::vector<uint32_t> offs;
    offs.reserve(s.size() + 1);
    std::size_t i = 0;
    while (i < s.size()) {
        offs.push_back(static_cast<uint32_t>(i));
        unsigned char c = static_cast<unsigned char>(s[i]);
        std::size_t len = 1;
        if ((c & 0x80) == 0x00) len = 1;
        else if ((c & 0xE0) == 0xC0) len = 2;
        else if ((c & 0xF0) == 0xE0) len = 3;
        else if ((c & 0xF8) == 0xF0) len = 4;
        // Clamp to the buffer and verify continuation bytes; fall back to one
        // byte on malformed input.
        if (i + len > s.size()) len = 1;
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) {
                len = 1;
                break;
            }
        }
        i += len;
    }
    offs.push_back(static_cast<uint32_t>(s.size()));
    return offs;
}

std::string_view first_code_point(std::string_view s) {
    if (s.empty()) return {};
    auto offs = utf8_offsets(s);
    return s.substr(0, offs[1]);
}

}  // namespace blockkit

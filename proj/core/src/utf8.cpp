#include "urduidx/utf8.hpp"

#include "urduidx/errors.hpp"

namespace urduidx {

namespace {

constexpr bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

} // namespace

std::u32string decode_utf8(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        const std::size_t start = i;
        const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            throw EncodingError("", start);
        }
        if (start + len > bytes.size()) {
            throw EncodingError("", start);
        }
        for (std::size_t k = 1; k < len; ++k) {
            const unsigned char bk = static_cast<unsigned char>(bytes[start + k]);
            if (!is_continuation(bk)) {
                throw EncodingError("", start);
            }
            cp = (cp << 6) | (bk & 0x3F);
        }
        // Overlong encodings, UTF-16 surrogates and values past U+10FFFF
        // are all ill-formed.
        static constexpr char32_t min_for_len[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (len > 1 && cp < min_for_len[len]) {
            throw EncodingError("", start);
        }
        if ((cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
            throw EncodingError("", start);
        }
        out.push_back(cp);
        i = start + len;
    }
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(std::u32string_view codepoints) {
    std::string out;
    out.reserve(codepoints.size() * 2);
    for (char32_t cp : codepoints) {
        append_utf8(out, cp);
    }
    return out;
}

bool is_whitespace(char32_t cp) {
    switch (cp) {
        case U'\t':
        case U'\n':
        case 0x0B:
        case 0x0C:
        case U'\r':
        case U' ':
        case 0x0085: // NEL
        case 0x00A0: // NBSP
        case 0x1680: // OGHAM SPACE MARK
        case 0x2028: // LINE SEPARATOR
        case 0x2029: // PARAGRAPH SEPARATOR
        case 0x202F: // NARROW NO-BREAK SPACE
        case 0x205F: // MEDIUM MATHEMATICAL SPACE
        case 0x3000: // IDEOGRAPHIC SPACE
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A; // EN QUAD .. HAIR SPACE
    }
}

std::size_t codepoint_count(std::string_view utf8) {
    std::size_t n = 0;
    for (char c : utf8) {
        if (!is_continuation(static_cast<unsigned char>(c))) {
            ++n;
        }
    }
    return n;
}

char32_t next_codepoint(std::string_view utf8, std::size_t& pos) {
    const unsigned char b0 = static_cast<unsigned char>(utf8[pos]);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    std::size_t len = 2;
    char32_t cp = b0 & 0x1F;
    if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    }
    for (std::size_t k = 1; k < len; ++k) {
        cp = (cp << 6) | (static_cast<unsigned char>(utf8[pos + k]) & 0x3F);
    }
    pos += len;
    return cp;
}

} // namespace urduidx

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace urduidx {

/// Decodes UTF-8 bytes into codepoints. Rejects ill-formed sequences
/// (truncated, overlong, surrogates, out of range) with an EncodingError
/// carrying the byte offset of the first bad sequence.
std::u32string decode_utf8(std::string_view bytes);

/// Encodes codepoints as UTF-8.
std::string encode_utf8(std::u32string_view codepoints);

/// Appends the UTF-8 encoding of one codepoint.
void append_utf8(std::string& out, char32_t cp);

/// True for codepoints with the Unicode White_Space property.
bool is_whitespace(char32_t cp);

/// Number of codepoints in a valid UTF-8 string (counts non-continuation
/// bytes; the input must already be known to be well formed).
std::size_t codepoint_count(std::string_view utf8);

/// Reads the codepoint starting at byte offset `pos` in a valid UTF-8
/// string and advances `pos` past it.
char32_t next_codepoint(std::string_view utf8, std::size_t& pos);

} // namespace urduidx

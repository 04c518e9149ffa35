#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dcatkit::syntax::detail {

/// Decodes one UTF-8 sequence at `pos`. Returns its byte length, or 0 when
/// the bytes are not well-formed (overlong, surrogate, truncated, > U+10FFFF).
std::size_t decode_utf8(std::string_view s, std::size_t pos, std::uint32_t& cp);

bool valid_utf8(std::string_view s);

/// Appends the UTF-8 encoding of a scalar value.
void append_utf8(std::string& out, std::uint32_t cp);

bool is_hex(char c);
int hex_value(char c);

bool is_pn_chars_base(std::uint32_t cp);
bool is_pn_chars_u(std::uint32_t cp);
bool is_pn_chars(std::uint32_t cp);

/// Characters that may not appear raw in an IRIREF.
bool is_forbidden_iri_char(std::uint32_t cp);

}  // namespace dcatkit::syntax::detail

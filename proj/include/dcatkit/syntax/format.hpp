#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dcatkit/syntax/diagnostics.hpp"

namespace dcatkit::syntax {

enum class RdfFormat { turtle, ntriples, jsonld };

std::string_view media_type(RdfFormat format);
std::string_view to_string(RdfFormat format);

/// From a file name extension (.ttl, .nt, .jsonld).
std::optional<RdfFormat> format_from_extension(std::string_view path);
/// From a Content-Type header value; parameters after ';' are ignored.
std::optional<RdfFormat> format_from_media_type(std::string_view content_type);
/// From a user-supplied name: turtle, ttl, ntriples, nt.
std::optional<RdfFormat> format_from_name(std::string_view name);

/// Dispatches to the matching parser. JSON-LD input is not supported and is
/// reported as a diagnostic.
ParseResult parse(std::string_view text, RdfFormat format, std::optional<std::string_view> base = std::nullopt);

}  // namespace dcatkit::syntax

#pragma once

#include <set>
#include <string>
#include <string_view>

#include "dcatkit/rdf/term.hpp"

namespace dcatkit::validate {

/// Parses a one-entry-per-line list ('#' comments, blank lines ignored).
/// Throws Error(CorruptDataFile) when a line fails `accept`.
std::set<std::string> parse_code_list(std::string_view text, bool (*accept)(std::string_view), std::string_view what);

/// The shipped IANA media type snapshot ("type/subtype", lower case).
const std::set<std::string>& iana_media_types();
/// The shipped access-rights vocabulary IRIs.
const std::set<std::string>& access_rights_codes();

/// "text/csv", "TEXT/CSV; charset=utf-8" or
/// <https://www.iana.org/assignments/media-types/text/csv>, normalized to
/// "text/csv"; empty when the value has neither shape.
std::string media_type_of(const rdf::Term& value);
bool is_registered_media_type(const rdf::Term& value);

}  // namespace dcatkit::validate

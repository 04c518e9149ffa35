#include "dcatkit/validate/codelists.hpp"

#include <algorithm>
#include <cctype>

#include "dcatkit/error.hpp"
#include "dcatkit/rdf/namespaces.hpp"

namespace dcatkit::data {
extern const std::string_view iana_media_types_txt;
extern const std::string_view access_rights_txt;
}  // namespace dcatkit::data

namespace dcatkit::validate {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool media_type_shape(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 == s.size()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

bool iri_shape(std::string_view s) { return rdf::is_absolute_iri(s); }

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::set<std::string> parse_code_list(std::string_view text, bool (*accept)(std::string_view), std::string_view what) {
  std::set<std::string> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    if (!accept(line)) {
      throw Error(ErrorCode::CorruptDataFile,
                  std::string(what) + " line " + std::to_string(line_no) + ": '" + std::string(line) + "'");
    }
    out.emplace(line);
  }
  return out;
}

const std::set<std::string>& iana_media_types() {
  static const std::set<std::string> types = [] {
    std::set<std::string> out;
    for (const std::string& t : parse_code_list(data::iana_media_types_txt, media_type_shape, "media type snapshot")) {
      out.insert(lower(t));
    }
    return out;
  }();
  return types;
}

const std::set<std::string>& access_rights_codes() {
  static const std::set<std::string> codes = parse_code_list(data::access_rights_txt, iri_shape, "access rights list");
  return codes;
}

std::string media_type_of(const rdf::Term& value) {
  if (value.is_blank()) return {};
  std::string_view text = value.value();
  if (value.is_iri()) {
    bool matched = false;
    for (std::string_view prefix : {ns::iana_media_types, std::string_view("http://www.iana.org/assignments/media-types/")}) {
      if (text.substr(0, prefix.size()) == prefix) {
        text.remove_prefix(prefix.size());
        matched = true;
        break;
      }
    }
    if (!matched) return {};
  }
  text = trim(text.substr(0, text.find(';')));
  if (!media_type_shape(text)) return {};
  return lower(text);
}

bool is_registered_media_type(const rdf::Term& value) {
  const std::string mt = media_type_of(value);
  return !mt.empty() && iana_media_types().count(mt) != 0;
}

}  // namespace dcatkit::validate

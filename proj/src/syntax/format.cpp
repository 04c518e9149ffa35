#include "dcatkit/syntax/format.hpp"

#include <algorithm>
#include <cctype>

#include "dcatkit/syntax/ntriples.hpp"
#include "dcatkit/syntax/turtle.hpp"

namespace dcatkit::syntax {

namespace {

std::string lower_trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view media_type(RdfFormat format) {
  switch (format) {
    case RdfFormat::turtle: return "text/turtle";
    case RdfFormat::ntriples: return "application/n-triples";
    case RdfFormat::jsonld: return "application/ld+json";
  }
  return "";
}

std::string_view to_string(RdfFormat format) {
  switch (format) {
    case RdfFormat::turtle: return "turtle";
    case RdfFormat::ntriples: return "ntriples";
    case RdfFormat::jsonld: return "jsonld";
  }
  return "";
}

std::optional<RdfFormat> format_from_extension(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  const std::string ext = lower_trimmed(path.substr(dot + 1));
  if (ext == "ttl") return RdfFormat::turtle;
  if (ext == "nt") return RdfFormat::ntriples;
  if (ext == "jsonld") return RdfFormat::jsonld;
  return std::nullopt;
}

std::optional<RdfFormat> format_from_media_type(std::string_view content_type) {
  const std::string type = lower_trimmed(content_type.substr(0, content_type.find(';')));
  if (type == "text/turtle" || type == "application/x-turtle") return RdfFormat::turtle;
  if (type == "application/n-triples") return RdfFormat::ntriples;
  if (type == "application/ld+json") return RdfFormat::jsonld;
  return std::nullopt;
}

std::optional<RdfFormat> format_from_name(std::string_view name) {
  const std::string n = lower_trimmed(name);
  if (n == "turtle" || n == "ttl") return RdfFormat::turtle;
  if (n == "ntriples" || n == "nt" || n == "n-triples") return RdfFormat::ntriples;
  if (n == "jsonld" || n == "json-ld") return RdfFormat::jsonld;
  return std::nullopt;
}

ParseResult parse(std::string_view text, RdfFormat format, std::optional<std::string_view> base) {
  switch (format) {
    case RdfFormat::turtle: return parse_turtle(text, base);
    case RdfFormat::ntriples: return parse_ntriples(text);
    case RdfFormat::jsonld: break;
  }
  ParseResult result;
  result.diagnostics.errors.push_back(Diagnostic{1, 1, "JSON-LD input is not supported; use Turtle or N-Triples"});
  return result;
}

}  // namespace dcatkit::syntax

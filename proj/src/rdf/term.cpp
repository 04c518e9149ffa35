#include "dcatkit/rdf/term.hpp"

#include "dcatkit/error.hpp"
#include "dcatkit/rdf/namespaces.hpp"

namespace dcatkit::rdf {

namespace {

const std::string& xsd_string() {
  static const std::string value = std::string(ns::xsd) + "string";
  return value;
}

const std::string& lang_string() {
  static const std::string value = std::string(ns::rdf) + "langString";
  return value;
}

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool valid_language_tag(std::string_view tag) {
  if (tag.empty()) return false;
  std::size_t i = 0;
  while (i < tag.size() && is_alpha(tag[i])) ++i;
  if (i == 0) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    ++i;
    const std::size_t start = i;
    while (i < tag.size() && (is_alpha(tag[i]) || is_digit(tag[i]))) ++i;
    if (i == start) return false;
  }
  return true;
}

void append_escaped(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
}

std::size_t mix(std::size_t seed, std::size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool has_scheme(std::string_view value) noexcept {
  if (value.empty() || !is_alpha(value[0])) return false;
  for (std::size_t i = 1; i < value.size(); ++i) {
    const char c = value[i];
    if (c == ':') return true;
    if (!(is_alpha(c) || is_digit(c) || c == '+' || c == '-' || c == '.')) return false;
  }
  return false;
}

bool is_absolute_iri(std::string_view value) noexcept {
  if (!has_scheme(value)) return false;
  for (unsigned char c : value) {
    if (c <= 0x20 || c == 0x7f) return false;
    switch (c) {
      case '<': case '>': case '"': case '{': case '}':
      case '|': case '^': case '`': case '\\':
        return false;
      default: break;
    }
  }
  return true;
}

Term Term::iri(std::string_view value) {
  if (!is_absolute_iri(value)) {
    throw Error(ErrorCode::InvalidIri, "not an absolute IRI: '" + std::string(value) + "'");
  }
  return Term(TermKind::iri, std::string(value), {}, {});
}

Term Term::blank(std::string_view label) {
  if (label.empty()) throw Error(ErrorCode::InvalidTerm, "empty blank node label");
  return Term(TermKind::blank, std::string(label), {}, {});
}

Term Term::literal(std::string_view lexical, std::string_view datatype) {
  if (datatype.empty()) return Term(TermKind::literal, std::string(lexical), xsd_string(), {});
  if (!is_absolute_iri(datatype)) {
    throw Error(ErrorCode::InvalidIri, "datatype is not an absolute IRI: '" + std::string(datatype) + "'");
  }
  if (datatype == lang_string()) {
    throw Error(ErrorCode::DatatypeLanguageClash, "rdf:langString requires a language tag");
  }
  return Term(TermKind::literal, std::string(lexical), std::string(datatype), {});
}

Term Term::lang_literal(std::string_view lexical, std::string_view language) {
  if (!valid_language_tag(language)) {
    throw Error(ErrorCode::InvalidTerm, "malformed language tag '" + std::string(language) + "'");
  }
  return Term(TermKind::literal, std::string(lexical), lang_string(), std::string(language));
}

std::string Term::to_string() const {
  switch (kind_) {
    case TermKind::iri: return "<" + value_ + ">";
    case TermKind::blank: return "_:" + value_;
    case TermKind::literal: {
      std::string out = "\"";
      append_escaped(out, value_);
      out += '"';
      if (!language_.empty()) {
        out += '@';
        out += language_;
      } else if (datatype_ != xsd_string()) {
        out += "^^<" + datatype_ + ">";
      }
      return out;
    }
  }
  return {};
}

Term make_iri(std::string_view lexical) { return Term::iri(lexical); }

Term make_literal(std::string_view lexical, std::optional<std::string_view> datatype,
                  std::optional<std::string_view> language) {
  if (datatype && language) {
    throw Error(ErrorCode::DatatypeLanguageClash, "a literal takes a datatype or a language tag, not both");
  }
  if (language) return Term::lang_literal(lexical, *language);
  return Term::literal(lexical, datatype.value_or(std::string_view{}));
}

Term make_blank(std::string_view label) { return Term::blank(label); }

Term iri(std::string_view ns, std::string_view local) {
  std::string value;
  value.reserve(ns.size() + local.size());
  value.append(ns).append(local);
  return Term::iri(value);
}

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.is_literal()) {
    throw Error(ErrorCode::InvalidTriple, "literal in subject position: " + subject.to_string());
  }
  if (!predicate.is_iri()) {
    throw Error(ErrorCode::InvalidTriple, "predicate must be an IRI: " + predicate.to_string());
  }
}

std::string Triple::to_string() const {
  return subject.to_string() + " " + predicate.to_string() + " " + object.to_string() + " .";
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = std::hash<std::string>{}(t.value());
  h = mix(h, static_cast<std::size_t>(t.kind()));
  if (t.is_literal()) {
    h = mix(h, std::hash<std::string>{}(t.datatype()));
    h = mix(h, std::hash<std::string>{}(t.language()));
  }
  return h;
}

std::size_t TripleHash::operator()(const Triple& t) const noexcept {
  TermHash th;
  return mix(mix(th(t.subject), th(t.predicate)), th(t.object));
}

}  // namespace dcatkit::rdf

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace dcatkit::rdf {

enum class TermKind : std::uint8_t { iri = 0, blank = 1, literal = 2 };

/// An RDF term. Equality and ordering are lexical: kind first, then the
/// value (IRI, blank label or lexical form), datatype and language tag.
class Term {
 public:
  /// Placeholder for aggregate members that are assigned later; never
  /// produced by the parsers and never a valid triple component.
  Term() = default;

  /// Checked IRI constructor; throws Error(InvalidIri).
  static Term iri(std::string_view value);
  static Term blank(std::string_view label);
  /// Literal with an explicit datatype IRI (xsd:string when empty).
  static Term literal(std::string_view lexical, std::string_view datatype = {});
  static Term lang_literal(std::string_view lexical, std::string_view language);

  TermKind kind() const noexcept { return kind_; }
  bool is_iri() const noexcept { return kind_ == TermKind::iri; }
  bool is_blank() const noexcept { return kind_ == TermKind::blank; }
  bool is_literal() const noexcept { return kind_ == TermKind::literal; }
  bool is_resource() const noexcept { return kind_ != TermKind::literal; }

  /// IRI string, blank label, or literal lexical form.
  const std::string& value() const noexcept { return value_; }
  const std::string& lexical() const noexcept { return value_; }
  /// Datatype IRI; empty unless this is a literal.
  const std::string& datatype() const noexcept { return datatype_; }
  /// Language tag; empty unless the datatype is rdf:langString.
  const std::string& language() const noexcept { return language_; }

  /// N-Triples rendering, used for diagnostics and reports.
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language)
      : kind_(kind), value_(std::move(value)), datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  TermKind kind_ = TermKind::iri;
  std::string value_;
  std::string datatype_;
  std::string language_;
};

/// Returns an IRI term when `lexical` is absolute; throws Error(InvalidIri) otherwise.
Term make_iri(std::string_view lexical);

/// Builds a literal. Supplying both datatype and language throws
/// Error(DatatypeLanguageClash); a language forces rdf:langString.
Term make_literal(std::string_view lexical, std::optional<std::string_view> datatype = std::nullopt,
                  std::optional<std::string_view> language = std::nullopt);

Term make_blank(std::string_view label);

/// IRI from namespace + local name. Intended for vocabulary constants.
Term iri(std::string_view ns, std::string_view local);

/// Pragmatic RFC 3987 subset: a scheme followed by ':' and no whitespace,
/// control characters or the delimiters <>"{}|^`\.
bool is_absolute_iri(std::string_view value) noexcept;

/// True for a well-formed scheme prefix ([A-Za-z][A-Za-z0-9+.-]*:).
bool has_scheme(std::string_view value) noexcept;

struct Triple {
  Triple(Term s, Term p, Term o);

  Term subject;
  Term predicate;
  Term object;

  std::string to_string() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const noexcept;
};

}  // namespace dcatkit::rdf

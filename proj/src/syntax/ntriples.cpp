#include "dcatkit/syntax/ntriples.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "dcatkit/rdf/namespaces.hpp"
#include "text_util.hpp"

namespace dcatkit::syntax {

using rdf::Term;

namespace {

struct LineError {
  std::size_t column;
  std::string message;
};

class LineParser {
 public:
  LineParser(std::string_view line, std::map<std::string, std::string>& labels, std::size_t& anon)
      : s_(line), labels_(labels), anon_(anon) {}

  // Returns nullopt for blank or comment-only lines.
  std::optional<rdf::Triple> parse() {
    skip_ws();
    if (at_end() || s_[i_] == '#') return std::nullopt;
    Term subject = s_[i_] == '<' ? iri() : s_[i_] == '_' ? blank() : fail<Term>("subject must be an IRI or blank node");
    require_ws();
    if (at_end() || s_[i_] != '<') fail<void>("predicate must be an IRI");
    Term predicate = iri();
    require_ws();
    Term object;
    if (at_end()) fail<void>("missing object");
    switch (s_[i_]) {
      case '<': object = iri(); break;
      case '_': object = blank(); break;
      case '"': object = literal(); break;
      default: fail<void>("object must be an IRI, blank node or literal");
    }
    skip_ws();
    if (at_end() || s_[i_] != '.') fail<void>("expected '.' at end of triple");
    ++i_;
    skip_ws();
    if (!at_end() && s_[i_] != '#') fail<void>("unexpected text after '.'");
    return rdf::Triple(std::move(subject), std::move(predicate), std::move(object));
  }

 private:
  template <typename T>
  [[noreturn]] T fail(const std::string& message) const {
    throw LineError{i_ + 1, message};
  }

  bool at_end() const { return i_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
  }
  void require_ws() {
    const std::size_t before = i_;
    skip_ws();
    // "<a><b>" is legal N-Triples; whitespace is only needed after blank labels.
    if (i_ == before && i_ > 0 && s_[i_ - 1] != '>' && s_[i_ - 1] != '"') fail<void>("expected whitespace");
  }

  std::uint32_t uchar() {
    const std::size_t digits = s_[i_] == 'u' ? 4 : 8;
    ++i_;
    if (i_ + digits > s_.size()) fail<void>("truncated \\u escape");
    std::uint32_t cp = 0;
    for (std::size_t k = 0; k < digits; ++k, ++i_) {
      if (!detail::is_hex(s_[i_])) fail<void>("malformed \\u escape");
      cp = cp * 16 + static_cast<std::uint32_t>(detail::hex_value(s_[i_]));
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail<void>("escape is not a Unicode scalar value");
    return cp;
  }

  void copy_char(std::string& out) {
    std::uint32_t cp = 0;
    const std::size_t len = detail::decode_utf8(s_, i_, cp);
    if (len == 0) fail<void>("invalid UTF-8");
    out.append(s_.substr(i_, len));
    i_ += len;
  }

  Term iri() {
    ++i_;
    std::string value;
    for (;;) {
      if (at_end()) fail<void>("unterminated IRI");
      const char c = s_[i_];
      if (c == '>') {
        ++i_;
        break;
      }
      if (c == '\\') {
        ++i_;
        if (at_end() || (s_[i_] != 'u' && s_[i_] != 'U')) fail<void>("only \\u and \\U escapes are allowed in IRIs");
        const std::uint32_t cp = uchar();
        if (detail::is_forbidden_iri_char(cp)) fail<void>("escaped character not allowed in IRI");
        detail::append_utf8(value, cp);
      } else if (static_cast<unsigned char>(c) < 0x80) {
        if (detail::is_forbidden_iri_char(static_cast<unsigned char>(c))) fail<void>("character not allowed in IRI");
        value += c;
        ++i_;
      } else {
        copy_char(value);
      }
    }
    if (!rdf::is_absolute_iri(value)) fail<void>("IRI must be absolute: <" + value + ">");
    return Term::iri(value);
  }

  Term blank() {
    if (s_.substr(i_, 2) != "_:") fail<void>("malformed blank node");
    i_ += 2;
    std::uint32_t cp = 0;
    std::size_t len = detail::decode_utf8(s_, i_, cp);
    if (len == 0 || !(detail::is_pn_chars_u(cp) || (cp >= '0' && cp <= '9'))) fail<void>("malformed blank node label");
    const std::size_t start = i_;
    i_ += len;
    std::size_t last_non_dot = i_;
    for (;;) {
      len = detail::decode_utf8(s_, i_, cp);
      if (len == 0 || !(detail::is_pn_chars(cp) || cp == '.')) break;
      i_ += len;
      if (cp != '.') last_non_dot = i_;
    }
    i_ = last_non_dot;
    const std::string label(s_.substr(start, i_ - start));
    auto it = labels_.find(label);
    if (it == labels_.end()) {
      // Same relabelling rule as the Turtle parser so both yield identical graphs.
      const bool generated_style = label.size() > 4 && label.rfind("anon", 0) == 0 &&
                                   std::all_of(label.begin() + 4, label.end(), [](char c) { return c >= '0' && c <= '9'; });
      it = labels_.emplace(label, generated_style ? "anon" + std::to_string(++anon_) : label).first;
    }
    return Term::blank(it->second);
  }

  Term literal() {
    ++i_;
    std::string lexical;
    for (;;) {
      if (at_end()) fail<void>("unterminated string literal");
      const char c = s_[i_];
      if (c == '"') {
        ++i_;
        break;
      }
      if (c == '\\') {
        ++i_;
        if (at_end()) fail<void>("unterminated escape");
        switch (s_[i_]) {
          case 't': lexical += '\t'; ++i_; break;
          case 'b': lexical += '\b'; ++i_; break;
          case 'n': lexical += '\n'; ++i_; break;
          case 'r': lexical += '\r'; ++i_; break;
          case 'f': lexical += '\f'; ++i_; break;
          case '"': lexical += '"'; ++i_; break;
          case '\'': lexical += '\''; ++i_; break;
          case '\\': lexical += '\\'; ++i_; break;
          case 'u':
          case 'U': detail::append_utf8(lexical, uchar()); break;
          default: fail<void>("invalid escape sequence");
        }
      } else if (c == '\r' || c == '\n') {
        fail<void>("line break in literal");
      } else if (static_cast<unsigned char>(c) < 0x80) {
        lexical += c;
        ++i_;
      } else {
        copy_char(lexical);
      }
    }
    if (!at_end() && s_[i_] == '@') {
      ++i_;
      const std::size_t start = i_;
      while (!at_end() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ == start) fail<void>("empty language tag");
      while (!at_end() && s_[i_] == '-') {
        ++i_;
        const std::size_t sub = i_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == sub) fail<void>("malformed language tag");
      }
      return Term::lang_literal(lexical, std::string(s_.substr(start, i_ - start)));
    }
    if (s_.substr(i_, 2) == "^^") {
      i_ += 2;
      if (at_end() || s_[i_] != '<') fail<void>("datatype must be an IRI");
      const Term datatype = iri();
      if (datatype.value() == std::string(ns::rdf) + "langString") fail<void>("rdf:langString literal without a language tag");
      return Term::literal(lexical, datatype.value());
    }
    return Term::literal(lexical);
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::map<std::string, std::string>& labels_;
  std::size_t& anon_;
};

bool safe_label(std::string_view s) {
  if (s.empty() || !(std::isalnum(static_cast<unsigned char>(s.front())) || s.front() == '_')) return false;
  if (s.back() == '.') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

}  // namespace

ParseResult parse_ntriples(std::string_view text) {
  ParseResult result;
  std::map<std::string, std::string> labels;
  std::size_t anon = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find_first_of("\r\n", pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end;
    if (pos < text.size() && text[pos] == '\r') ++pos;
    if (pos < text.size() && text[pos] == '\n') ++pos;
    try {
      if (auto triple = LineParser(line, labels, anon).parse()) result.graph.insert(std::move(*triple));
    } catch (const LineError& e) {
      result.diagnostics.errors.push_back(Diagnostic{line_no, e.column, e.message, ErrorCode::SyntaxError});
      break;
    } catch (const Error& e) {
      result.diagnostics.errors.push_back(Diagnostic{line_no, 1, e.what(), e.code()});
      break;
    }
  }
  return result;
}

std::string serialize_ntriples(const rdf::Graph& g) {
  std::map<Term, Term> relabel;
  std::set<std::string> taken;
  for (const Term& b : g.blank_nodes()) {
    if (safe_label(b.value())) taken.insert(b.value());
  }
  std::size_t n = 0;
  for (const Term& b : g.blank_nodes()) {
    if (safe_label(b.value())) continue;
    std::string label;
    do {
      label = "b" + std::to_string(n++);
    } while (taken.count(label) != 0);
    taken.insert(label);
    relabel.emplace(b, Term::blank(label));
  }
  auto term = [&relabel](const Term& t) {
    auto it = relabel.find(t);
    return it == relabel.end() ? t.to_string() : it->second.to_string();
  };
  std::string out;
  for (const rdf::Triple& t : g) {
    out += term(t.subject) + " " + t.predicate.to_string() + " " + term(t.object) + " .\n";
  }
  return out;
}

}  // namespace dcatkit::syntax

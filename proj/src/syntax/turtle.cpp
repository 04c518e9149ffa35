#include "dcatkit/syntax/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <vector>

#include "dcatkit/rdf/namespaces.hpp"
#include "text_util.hpp"

namespace dcatkit::syntax {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;

std::string Diagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + std::string(dcatkit::to_string(code)) +
         ": " + message;
}

// ---------------------------------------------------------------------------
// IRI resolution

namespace {

struct IriParts {
  std::string scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

IriParts split_iri(std::string_view s) {
  IriParts parts;
  if (rdf::has_scheme(s)) {
    const auto colon = s.find(':');
    parts.scheme = std::string(s.substr(0, colon));
    s.remove_prefix(colon + 1);
  }
  if (const auto hash = s.find('#'); hash != std::string_view::npos) {
    parts.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  if (const auto q = s.find('?'); q != std::string_view::npos) {
    parts.query = std::string(s.substr(q + 1));
    s = s.substr(0, q);
  }
  if (s.substr(0, 2) == "//") {
    s.remove_prefix(2);
    const auto slash = s.find('/');
    parts.authority = std::string(s.substr(0, slash));
    s = slash == std::string_view::npos ? std::string_view{} : s.substr(slash);
  }
  parts.path = std::string(s);
  return parts;
}

std::string remove_dot_segments(std::string input) {
  std::string output;
  while (!input.empty()) {
    if (input.rfind("../", 0) == 0) {
      input.erase(0, 3);
    } else if (input.rfind("./", 0) == 0) {
      input.erase(0, 2);
    } else if (input.rfind("/./", 0) == 0) {
      input.erase(0, 2);
    } else if (input == "/.") {
      input = "/";
    } else if (input.rfind("/../", 0) == 0 || input == "/..") {
      input = input == "/.." ? "/" : input.substr(3);
      const auto last = output.rfind('/');
      output.erase(last == std::string::npos ? 0 : last);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      const std::size_t start = input[0] == '/' ? 1 : 0;
      const auto next = input.find('/', start);
      const std::size_t len = next == std::string::npos ? input.size() : next;
      output += input.substr(0, len);
      input.erase(0, len);
    }
  }
  return output;
}

std::string recompose(const IriParts& p) {
  std::string out;
  if (!p.scheme.empty()) out += p.scheme + ":";
  if (p.authority) out += "//" + *p.authority;
  out += p.path;
  if (p.query) out += "?" + *p.query;
  if (p.fragment) out += "#" + *p.fragment;
  return out;
}

}  // namespace

std::string resolve_iri(std::string_view base, std::string_view reference) {
  const IriParts r = split_iri(reference);
  const IriParts b = split_iri(base);
  IriParts t;
  if (!r.scheme.empty()) {
    t = r;
    t.path = remove_dot_segments(r.path);
  } else {
    if (r.authority) {
      t.authority = r.authority;
      t.path = remove_dot_segments(r.path);
      t.query = r.query;
    } else {
      if (r.path.empty()) {
        t.path = b.path;
        t.query = r.query ? r.query : b.query;
      } else {
        if (r.path[0] == '/') {
          t.path = remove_dot_segments(r.path);
        } else {
          std::string merged;
          if (b.authority && b.path.empty()) {
            merged = "/" + r.path;
          } else {
            const auto last = b.path.rfind('/');
            merged = (last == std::string::npos ? std::string() : b.path.substr(0, last + 1)) + r.path;
          }
          t.path = remove_dot_segments(merged);
        }
        t.query = r.query;
      }
      t.authority = b.authority;
    }
    t.scheme = b.scheme;
  }
  t.fragment = r.fragment;
  return recompose(t);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Failure {
  std::size_t line;
  std::size_t column;
  std::string message;
  ErrorCode code;
};

constexpr int kMaxDepth = 256;

class TurtleParser {
 public:
  TurtleParser(std::string_view text, std::optional<std::string_view> base) : src_(text) {
    if (base) base_ = std::string(*base);
  }

  ParseResult run() {
    ParseResult result;
    try {
      for (;;) {
        skip_ws();
        if (eof()) break;
        statement();
        for (Triple& t : pending_) graph_.insert(std::move(t));
        pending_.clear();
      }
    } catch (const Failure& f) {
      diag_.errors.push_back(Diagnostic{f.line, f.column, f.message, f.code});
    } catch (const Error& e) {
      // Term construction rejected something the grammar let through.
      diag_.errors.push_back(Diagnostic{line_, column_, e.what(), e.code()});
    }
    graph_.prefixes() = prefixes_;
    result.graph = std::move(graph_);
    result.diagnostics = std::move(diag_);
    return result;
  }

 private:
  // -- cursor ---------------------------------------------------------------

  bool eof() const { return pos_ >= src_.size(); }
  int peek(std::size_t k = 0) const {
    return pos_ + k < src_.size() ? static_cast<unsigned char>(src_[pos_ + k]) : -1;
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& message, ErrorCode code = ErrorCode::SyntaxError) const {
    throw Failure{line_, column_, message, code};
  }

  std::string describe_next() const {
    if (eof()) return "end of input";
    const int c = peek();
    if (c >= 0x21 && c < 0x7f) return std::string("'") + static_cast<char>(c) + "'";
    return "byte 0x" + std::string(1, "0123456789abcdef"[c >> 4]) + "0123456789abcdef"[c & 15];
  }

  void expect(char c) {
    if (peek() != static_cast<unsigned char>(c)) fail(std::string("expected '") + c + "', found " + describe_next());
    advance();
  }

  void skip_ws() {
    while (!eof()) {
      const int c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  // Decodes the code point at pos_ + offset without consuming it.
  std::uint32_t code_point_at(std::size_t offset, std::size_t& len) const {
    std::uint32_t cp = 0;
    len = detail::decode_utf8(src_, pos_ + offset, cp);
    return len == 0 ? 0xFFFFFFFF : cp;
  }

  bool keyword_ahead(std::string_view word) const {
    if (src_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(src_[pos_ + i])) != word[i]) return false;
    }
    const int next = peek(word.size());
    return next == -1 || next == ' ' || next == '\t' || next == '\r' || next == '\n' || next == '<' || next == '#';
  }

  // -- statements -----------------------------------------------------------

  void statement() {
    if (peek() == '@') {
      advance();
      if (keyword_ahead("prefix") && src_.substr(pos_, 6) == "prefix") {
        advance(6);
        prefix_directive();
      } else if (keyword_ahead("base") && src_.substr(pos_, 4) == "base") {
        advance(4);
        base_directive();
      } else {
        fail("unknown directive");
      }
      skip_ws();
      expect('.');
      return;
    }
    if (keyword_ahead("prefix")) {
      advance(6);
      prefix_directive();
      return;
    }
    if (keyword_ahead("base")) {
      advance(4);
      base_directive();
      return;
    }
    triples();
    skip_ws();
    expect('.');
  }

  void prefix_directive() {
    skip_ws();
    std::string name = pname_prefix();
    expect(':');
    skip_ws();
    if (peek() != '<') fail("expected IRI after prefix name, found " + describe_next());
    std::string ns_iri = iriref();
    auto it = prefixes_.find(name);
    if (it != prefixes_.end() && it->second != ns_iri) {
      diag_.warnings.push_back(Diagnostic{line_, column_, "prefix '" + name + ":' re-declared", ErrorCode::SyntaxError});
    }
    prefixes_[name] = std::move(ns_iri);
  }

  void base_directive() {
    skip_ws();
    if (peek() != '<') fail("expected IRI after base, found " + describe_next());
    base_ = iriref();
  }

  void triples() {
    if (peek() == '[') {
      const Term node = bracket(0);
      skip_ws();
      if (node_was_anon_ || peek() != '.') predicate_object_list(node, 0);
      return;
    }
    const Term subject = subject_term();
    skip_ws();
    predicate_object_list(subject, 0);
  }

  Term subject_term() {
    const int c = peek();
    if (c == '<') return Term::iri(iriref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') return collection(0);
    if (c == '"' || c == '\'') fail("literal in subject position");
    if (c == -1) fail("unexpected end of input");
    return prefixed_name();
  }

  void predicate_object_list(const Term& subject, int depth) {
    verb_object_list(subject, depth);
    for (;;) {
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        advance();
        skip_ws();
      }
      const int c = peek();
      if (c == '.' || c == ']' || c == -1) return;
      verb_object_list(subject, depth);
    }
  }

  void verb_object_list(const Term& subject, int depth) {
    const Term predicate = verb();
    skip_ws();
    for (;;) {
      Term object = object_term(depth);
      pending_.emplace_back(subject, predicate, std::move(object));
      skip_ws();
      if (peek() != ',') return;
      advance();
      skip_ws();
    }
  }

  Term verb() {
    if (peek() == 'a') {
      const int next = peek(1);
      const bool name_continues = next >= 0x80 || std::isalnum(next) || next == '_' || next == '-' ||
                                  next == ':' || next == '.';
      if (!name_continues) {
        advance();
        static const Term rdf_type = rdf::iri(ns::rdf, "type");
        return rdf_type;
      }
    }
    const int c = peek();
    if (c == '<') return Term::iri(iriref());
    if (c == '_' || c == '[' || c == '(' || c == '"' || c == '\'') fail("predicate must be an IRI");
    if (c == -1) fail("unexpected end of input, expected a predicate");
    return prefixed_name();
  }

  Term object_term(int depth) {
    const int c = peek();
    if (c == '<') return Term::iri(iriref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return bracket(depth + 1);
    if (c == '(') return collection(depth + 1);
    if (c == '"' || c == '\'') return rdf_literal();
    if ((c >= '0' && c <= '9') || c == '+' || c == '-' || (c == '.' && peek(1) >= '0' && peek(1) <= '9')) {
      return numeric_literal();
    }
    if (boolean_ahead("true")) {
      advance(4);
      return Term::literal("true", std::string(ns::xsd) + "boolean");
    }
    if (boolean_ahead("false")) {
      advance(5);
      return Term::literal("false", std::string(ns::xsd) + "boolean");
    }
    if (c == -1) fail("unexpected end of input, expected an object");
    return prefixed_name();
  }

  bool boolean_ahead(std::string_view word) const {
    if (src_.substr(pos_, word.size()) != word) return false;
    const int next = peek(word.size());
    return !(next >= 0x80 || std::isalnum(next) || next == '_' || next == '-' || next == ':');
  }

  // '[' already at cursor. Returns the node; sets node_was_anon_ for "[]".
  Term bracket(int depth) {
    if (depth > kMaxDepth) fail("nesting too deep");
    advance();
    skip_ws();
    const Term node = Term::blank(fresh_label());
    if (peek() == ']') {
      advance();
      node_was_anon_ = true;
      return node;
    }
    predicate_object_list(node, depth);
    skip_ws();
    expect(']');
    node_was_anon_ = false;
    return node;
  }

  Term collection(int depth) {
    if (depth > kMaxDepth) fail("nesting too deep");
    advance();
    static const Term first = rdf::iri(ns::rdf, "first");
    static const Term rest = rdf::iri(ns::rdf, "rest");
    static const Term nil = rdf::iri(ns::rdf, "nil");
    std::vector<Term> items;
    for (;;) {
      skip_ws();
      if (peek() == ')') {
        advance();
        break;
      }
      if (eof()) fail("unterminated collection");
      items.push_back(object_term(depth));
    }
    if (items.empty()) return nil;
    std::vector<Term> cells;
    cells.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(Term::blank(fresh_label()));
    for (std::size_t i = 0; i < items.size(); ++i) {
      pending_.emplace_back(cells[i], first, items[i]);
      pending_.emplace_back(cells[i], rest, i + 1 < items.size() ? cells[i + 1] : nil);
    }
    return cells.front();
  }

  // -- terminals ------------------------------------------------------------

  std::uint32_t read_uchar() {
    // Cursor is on 'u' or 'U' after the backslash.
    const std::size_t digits = peek() == 'u' ? 4 : 8;
    advance();
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const int c = peek();
      if (c < 0 || !detail::is_hex(static_cast<char>(c))) fail("malformed \\u escape");
      cp = cp * 16 + static_cast<std::uint32_t>(detail::hex_value(static_cast<char>(c)));
      advance();
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("escape is not a Unicode scalar value");
    return cp;
  }

  void copy_utf8_char(std::string& out) {
    std::size_t len = 0;
    const std::uint32_t cp = code_point_at(0, len);
    if (len == 0) fail("invalid UTF-8");
    (void)cp;
    out.append(src_.substr(pos_, len));
    advance(len);
  }

  std::string iriref() {
    advance();  // '<'
    std::string raw;
    for (;;) {
      const int c = peek();
      if (c == -1) fail("unterminated IRI");
      if (c == '>') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (peek() != 'u' && peek() != 'U') fail("only \\u and \\U escapes are allowed in IRIs");
        const std::uint32_t cp = read_uchar();
        if (detail::is_forbidden_iri_char(cp)) fail("escaped character not allowed in IRI");
        detail::append_utf8(raw, cp);
        continue;
      }
      if (c < 0x80) {
        if (detail::is_forbidden_iri_char(static_cast<std::uint32_t>(c))) fail("character not allowed in IRI");
        raw += static_cast<char>(c);
        advance();
      } else {
        copy_utf8_char(raw);
      }
    }
    return absolutize(raw);
  }

  std::string absolutize(const std::string& raw) {
    std::string value;
    if (rdf::has_scheme(raw)) {
      value = raw;
    } else if (base_) {
      value = resolve_iri(*base_, raw);
    } else {
      fail("relative IRI <" + raw + "> with no base", ErrorCode::BaseRequired);
    }
    if (!rdf::is_absolute_iri(value)) fail("not a valid IRI: <" + value + ">");
    return value;
  }

  // PN_PREFIX at cursor (possibly empty); stops before ':'.
  std::string pname_prefix() {
    std::string out;
    std::size_t len = 0;
    std::uint32_t cp = code_point_at(0, len);
    if (peek() == ':') return out;
    if (len == 0 || !detail::is_pn_chars_base(cp)) fail("expected a prefix name, found " + describe_next());
    out.append(src_.substr(pos_, len));
    advance(len);
    for (;;) {
      cp = code_point_at(0, len);
      if (len == 0) break;
      if (!(detail::is_pn_chars(cp) || cp == '.')) break;
      out.append(src_.substr(pos_, len));
      advance(len);
    }
    if (out.back() == '.') fail("prefix name may not end with '.'");
    return out;
  }

  Term prefixed_name() {
    const std::string prefix = pname_prefix();
    if (peek() != ':') fail("expected ':' in prefixed name, found " + describe_next());
    advance();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + ":'");
    const std::string local = pn_local();
    const std::string value = it->second + local;
    if (!rdf::is_absolute_iri(value)) fail("prefixed name does not expand to a valid IRI: <" + value + ">");
    return Term::iri(value);
  }

  // Length of a PLX at offset, or 0.
  std::size_t plx_length(std::size_t offset) const {
    const int c = peek(offset);
    if (c == '%') {
      const int h1 = peek(offset + 1);
      const int h2 = peek(offset + 2);
      if (h1 >= 0 && h2 >= 0 && detail::is_hex(static_cast<char>(h1)) && detail::is_hex(static_cast<char>(h2))) return 3;
      return 0;
    }
    if (c == '\\') {
      const int e = peek(offset + 1);
      if (e >= 0 && std::string_view("_~.-!$&'()*+,;=/?#@%").find(static_cast<char>(e)) != std::string_view::npos) {
        return 2;
      }
    }
    return 0;
  }

  std::string pn_local() {
    // Scan greedily, then give back trailing dots.
    struct Piece {
      std::size_t offset;
      std::size_t length;
      bool dot;
      bool escape;
    };
    std::vector<Piece> pieces;
    std::size_t offset = 0;
    bool first = true;
    for (;;) {
      std::size_t len = 0;
      const std::uint32_t cp = code_point_at(offset, len);
      if (const std::size_t plx = plx_length(offset); plx > 0) {
        pieces.push_back({offset, plx, false, plx == 2});
        offset += plx;
      } else if (len > 0 && (first ? (detail::is_pn_chars_u(cp) || cp == ':' || (cp >= '0' && cp <= '9'))
                                     : (detail::is_pn_chars(cp) || cp == ':' || cp == '.'))) {
        pieces.push_back({offset, len, cp == '.', false});
        offset += len;
      } else {
        break;
      }
      first = false;
    }
    while (!pieces.empty() && pieces.back().dot) pieces.pop_back();
    std::string out;
    std::size_t consumed = 0;
    for (const Piece& p : pieces) {
      if (p.escape) {
        out += src_[pos_ + p.offset + 1];
      } else {
        out.append(src_.substr(pos_ + p.offset, p.length));
      }
      consumed = p.offset + p.length;
    }
    advance(consumed);
    return out;
  }

  Term blank_label() {
    advance(2);  // "_:"
    std::size_t len = 0;
    std::uint32_t cp = code_point_at(0, len);
    if (len == 0 || !(detail::is_pn_chars_u(cp) || (cp >= '0' && cp <= '9'))) fail("malformed blank node label");
    std::size_t end = len;
    std::size_t last_non_dot = len;
    for (;;) {
      cp = code_point_at(end, len);
      if (len == 0 || !(detail::is_pn_chars(cp) || cp == '.')) break;
      end += len;
      if (cp != '.') last_non_dot = end;
    }
    const std::string label(src_.substr(pos_, last_non_dot));
    advance(last_non_dot);
    return Term::blank(map_label(label));
  }

  static bool is_generated_style(std::string_view label) {
    if (label.size() <= 4 || label.substr(0, 4) != "anon") return false;
    return std::all_of(label.begin() + 4, label.end(), [](char c) { return c >= '0' && c <= '9'; });
  }

  std::string map_label(const std::string& label) {
    auto it = labels_.find(label);
    if (it != labels_.end()) return it->second;
    std::string internal = is_generated_style(label) ? fresh_label() : label;
    labels_.emplace(label, internal);
    return internal;
  }

  std::string fresh_label() { return "anon" + std::to_string(++anon_counter_); }

  Term rdf_literal() {
    const std::string lexical = string_literal();
    if (peek() == '@') {
      advance();
      std::string tag;
      while (!eof() && std::isalpha(peek())) {
        tag += static_cast<char>(peek());
        advance();
      }
      if (tag.empty()) fail("empty language tag");
      while (peek() == '-') {
        tag += '-';
        advance();
        const std::size_t before = tag.size();
        while (!eof() && std::isalnum(peek())) {
          tag += static_cast<char>(peek());
          advance();
        }
        if (tag.size() == before) fail("malformed language tag");
      }
      return Term::lang_literal(lexical, tag);
    }
    if (peek() == '^' && peek(1) == '^') {
      advance(2);
      const int c = peek();
      Term datatype = c == '<' ? Term::iri(iriref()) : prefixed_name();
      if (datatype.value() == std::string(ns::rdf) + "langString") fail("rdf:langString literal without a language tag");
      return Term::literal(lexical, datatype.value());
    }
    return Term::literal(lexical);
  }

  std::string string_literal() {
    const char quote = static_cast<char>(peek());
    const bool long_form = peek(1) == quote && peek(2) == quote;
    advance(long_form ? 3 : 1);
    std::string out;
    for (;;) {
      const int c = peek();
      if (c == -1) fail("unterminated string literal");
      if (c == quote) {
        if (!long_form) {
          advance();
          return out;
        }
        if (peek(1) == quote && peek(2) == quote) {
          // A long string may end with up to two extra quotes before the terminator.
          std::size_t run = 3;
          while (peek(run) == quote && run < 5) ++run;
          out.append(run - 3, quote);
          advance(run);
          return out;
        }
        out += quote;
        advance();
        continue;
      }
      if (c == '\\') {
        advance();
        const int e = peek();
        switch (e) {
          case 't': out += '\t'; advance(); break;
          case 'b': out += '\b'; advance(); break;
          case 'n': out += '\n'; advance(); break;
          case 'r': out += '\r'; advance(); break;
          case 'f': out += '\f'; advance(); break;
          case '"': out += '"'; advance(); break;
          case '\'': out += '\''; advance(); break;
          case '\\': out += '\\'; advance(); break;
          case 'u':
          case 'U': detail::append_utf8(out, read_uchar()); break;
          default: fail("invalid escape sequence in string");
        }
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) fail("line break in short string literal");
      if (c < 0x80) {
        out += static_cast<char>(c);
        advance();
      } else {
        copy_utf8_char(out);
      }
    }
  }

  Term numeric_literal() {
    std::size_t i = 0;
    auto digit = [this](std::size_t k) { return peek(k) >= '0' && peek(k) <= '9'; };
    if (peek() == '+' || peek() == '-') ++i;
    const std::size_t int_start = i;
    while (digit(i)) ++i;
    const bool has_int = i > int_start;
    bool has_fraction = false;
    bool has_exponent = false;
    auto exponent_at = [&](std::size_t k) -> std::size_t {
      if (peek(k) != 'e' && peek(k) != 'E') return 0;
      std::size_t j = k + 1;
      if (peek(j) == '+' || peek(j) == '-') ++j;
      if (!digit(j)) return 0;
      while (digit(j)) ++j;
      return j;
    };
    if (peek(i) == '.' && digit(i + 1)) {
      ++i;
      while (digit(i)) ++i;
      has_fraction = true;
    } else if (peek(i) == '.' && has_int && exponent_at(i + 1) > 0) {
      ++i;
    }
    if (const std::size_t end = exponent_at(i); end > 0 && (has_int || has_fraction)) {
      i = end;
      has_exponent = true;
    }
    if (!has_int && !has_fraction) fail("malformed number");
    const std::string lexical(src_.substr(pos_, i));
    advance(i);
    const char* type = has_exponent ? "double" : has_fraction ? "decimal" : "integer";
    return Term::literal(lexical, std::string(ns::xsd) + type);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::optional<std::string> base_;
  std::map<std::string, std::string> prefixes_;
  std::map<std::string, std::string> labels_;
  std::size_t anon_counter_ = 0;
  bool node_was_anon_ = false;
  std::vector<Triple> pending_;
  Graph graph_;
  ParseDiagnostics diag_;
};

}  // namespace

ParseResult parse_turtle(std::string_view text, std::optional<std::string_view> base) {
  return TurtleParser(text, base).run();
}

// ---------------------------------------------------------------------------
// Serializer

namespace {

bool ascii_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

// Conservative ASCII subset of PN_LOCAL / BLANK_NODE_LABEL.
bool safe_name(std::string_view s, bool allow_empty) {
  if (s.empty()) return allow_empty;
  if (!(std::isalnum(static_cast<unsigned char>(s.front())) || s.front() == '_')) return false;
  if (!ascii_name_char(s.back())) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return ascii_name_char(c) || c == '.'; });
}

bool safe_prefix(std::string_view s) {
  if (s.empty()) return true;
  if (!std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  if (!ascii_name_char(s.back())) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return ascii_name_char(c) || c == '.'; });
}

bool matches_integer(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool matches_decimal(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == s.size() || s[i] != '.') return false;
  ++i;
  const std::size_t frac = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  return i == s.size() && i > frac;
}

bool matches_double(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  const std::size_t int_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  const bool has_int = i > int_start;
  bool has_frac = false;
  if (i < s.size() && s[i] == '.') {
    ++i;
    const std::size_t f = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    has_frac = i > f;
  }
  if (!has_int && !has_frac) return false;
  if (i == s.size() || (s[i] != 'e' && s[i] != 'E')) return false;
  ++i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  const std::size_t e = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  return i == s.size() && i > e;
}

class TurtleWriter {
 public:
  explicit TurtleWriter(const Graph& g) : g_(g) {
    for (const auto& [prefix, ns_iri] : g.prefixes()) {
      if (safe_prefix(prefix) && rdf::is_absolute_iri(ns_iri)) usable_.emplace_back(prefix, ns_iri);
    }
    // Longest namespace first so the most specific binding wins.
    std::stable_sort(usable_.begin(), usable_.end(),
                     [](const auto& a, const auto& b) { return a.second.size() > b.second.size(); });
    assign_blank_labels();
  }

  std::string write() {
    std::string out;
    std::vector<std::pair<std::string, std::string>> sorted(usable_.begin(), usable_.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [prefix, ns_iri] : sorted) out += "@prefix " + prefix + ": <" + ns_iri + "> .\n";
    if (!sorted.empty() && !g_.empty()) out += "\n";

    const Term* subject = nullptr;
    const Term* predicate = nullptr;
    for (const Triple& t : g_) {
      if (subject == nullptr || t.subject != *subject) {
        if (subject != nullptr) out += " .\n\n";
        out += node(t.subject);
        out += ' ';
        out += verb(t.predicate);
        out += ' ';
      } else if (t.predicate != *predicate) {
        out += " ;\n    ";
        out += verb(t.predicate);
        out += ' ';
      } else {
        out += ", ";
      }
      out += object(t.object);
      subject = &t.subject;
      predicate = &t.predicate;
    }
    if (subject != nullptr) out += " .\n";
    return out;
  }

 private:
  void assign_blank_labels() {
    std::set<std::string> taken;
    std::vector<Term> unsafe;
    for (const Term& b : g_.blank_nodes()) {
      if (safe_name(b.value(), false)) {
        taken.insert(b.value());
        labels_.emplace(b, b.value());
      } else {
        unsafe.push_back(b);
      }
    }
    std::size_t n = 0;
    for (const Term& b : unsafe) {
      std::string label;
      do {
        label = "b" + std::to_string(n++);
      } while (taken.count(label) != 0);
      taken.insert(label);
      labels_.emplace(b, label);
    }
  }

  std::string iri_text(const std::string& value) const {
    for (const auto& [prefix, ns_iri] : usable_) {
      if (value.size() >= ns_iri.size() && value.compare(0, ns_iri.size(), ns_iri) == 0) {
        const std::string_view local = std::string_view(value).substr(ns_iri.size());
        if (safe_name(local, true)) return prefix + ":" + std::string(local);
      }
    }
    return "<" + value + ">";
  }

  std::string node(const Term& t) const {
    if (t.is_iri()) return iri_text(t.value());
    return "_:" + labels_.at(t);
  }

  std::string verb(const Term& p) const {
    static const std::string rdf_type = std::string(ns::rdf) + "type";
    return p.value() == rdf_type ? "a" : iri_text(p.value());
  }

  static void escape(std::string& out, std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    for (char ch : s) {
      const auto c = static_cast<unsigned char>(ch);
      switch (c) {
        case '\\': out += "\\\\"; break;
        case '"': out += "\\\""; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        default:
          if (c < 0x20 || c == 0x7f) {
            out += "\\u00";
            out += hex[c >> 4];
            out += hex[c & 15];
          } else {
            out += ch;
          }
      }
    }
  }

  std::string object(const Term& t) const {
    if (!t.is_literal()) return node(t);
    const std::string& dt = t.datatype();
    const std::string_view xsd = ns::xsd;
    if (dt.size() > xsd.size() && dt.compare(0, xsd.size(), xsd) == 0) {
      const std::string_view local = std::string_view(dt).substr(xsd.size());
      const std::string& lex = t.lexical();
      if ((local == "integer" && matches_integer(lex)) || (local == "decimal" && matches_decimal(lex)) ||
          (local == "double" && matches_double(lex)) || (local == "boolean" && (lex == "true" || lex == "false"))) {
        return lex;
      }
    }
    std::string out = "\"";
    escape(out, t.lexical());
    out += '"';
    if (!t.language().empty()) {
      out += '@';
      out += t.language();
    } else if (dt != std::string(ns::xsd) + "string") {
      out += "^^";
      out += iri_text(dt);
    }
    return out;
  }

  const Graph& g_;
  std::vector<std::pair<std::string, std::string>> usable_;
  std::map<Term, std::string> labels_;
};

}  // namespace

std::string serialize_turtle(const Graph& g) { return TurtleWriter(g).write(); }

}  // namespace dcatkit::syntax

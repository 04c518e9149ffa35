#include "dcatkit/dcat/spatial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "dcatkit/dcat/terms.hpp"

namespace dcatkit::dcat {

namespace {

class WktReader {
 public:
  explicit WktReader(std::string_view s) : s_(s) {}

  std::optional<WktShape> read() {
    skip_ws();
    if (peek() == '<') {
      const auto close = s_.find('>', i_);
      if (close == std::string_view::npos) return std::nullopt;
      i_ = close + 1;
    }
    skip_ws();
    std::optional<WktShape> shape;
    if (keyword("POINT")) {
      if (!open()) return std::nullopt;
      auto p = position();
      if (!p || !close()) return std::nullopt;
      shape = *p;
    } else if (keyword("POLYGON")) {
      WktPolygon poly;
      if (!open()) return std::nullopt;
      do {
        auto ring = read_ring();
        if (!ring) return std::nullopt;
        poly.rings.push_back(std::move(*ring));
      } while (comma());
      if (!close()) return std::nullopt;
      shape = std::move(poly);
    } else {
      return std::nullopt;
    }
    skip_ws();
    if (i_ != s_.size()) return std::nullopt;
    return shape;
  }

 private:
  int peek() const { return i_ < s_.size() ? static_cast<unsigned char>(s_[i_]) : -1; }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool keyword(std::string_view word) {
    if (s_.size() - i_ < word.size()) return false;
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (std::toupper(static_cast<unsigned char>(s_[i_ + k])) != word[k]) return false;
    }
    i_ += word.size();
    return true;
  }

  bool punct(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  bool open() { return punct('('); }
  bool close() { return punct(')'); }
  bool comma() { return punct(','); }

  std::optional<double> number() {
    skip_ws();
    const char* begin = s_.data() + i_;
    const char* end = s_.data() + s_.size();
    if (begin < end && *begin == '+') ++begin;
    double v = 0;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || !std::isfinite(v)) return std::nullopt;
    i_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  std::optional<WktPoint> position() {
    auto x = number();
    auto y = number();
    if (!x || !y) return std::nullopt;
    // An optional third ordinate is accepted and dropped.
    const std::size_t save = i_;
    skip_ws();
    if (peek() != ',' && peek() != ')') {
      if (!number()) {
        i_ = save;
        return std::nullopt;
      }
    }
    return WktPoint{*x, *y};
  }

  std::optional<std::vector<WktPoint>> read_ring() {
    if (!open()) return std::nullopt;
    std::vector<WktPoint> ring;
    do {
      auto p = position();
      if (!p) return std::nullopt;
      ring.push_back(*p);
    } while (comma());
    if (!close()) return std::nullopt;
    if (ring.size() < 4) return std::nullopt;
    if (ring.front().x != ring.back().x || ring.front().y != ring.back().y) return std::nullopt;
    return ring;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Geometry> geometries_of(const rdf::Graph& g, const rdf::Term& node, const rdf::Term& predicate) {
  std::vector<Geometry> out;
  for (const rdf::Term& v : g.objects(node, predicate)) out.push_back(classify_geometry(v));
  return out;
}

}  // namespace

std::optional<WktShape> parse_wkt(std::string_view text) { return WktReader(text).read(); }

Geometry classify_geometry(const rdf::Term& value) {
  Geometry geo{value, GeometryEncoding::unknown, std::nullopt, false};
  if (!value.is_literal()) {
    geo.unparseable = true;
    return geo;
  }
  const std::string& dt = value.datatype();
  if (ends_with(dt, "#wktLiteral")) {
    geo.encoding = GeometryEncoding::wkt;
    geo.shape = parse_wkt(value.lexical());
    geo.unparseable = !geo.shape;
    return geo;
  }
  if (ends_with(dt, "#gmlLiteral")) {
    geo.encoding = GeometryEncoding::gml;
    return geo;
  }
  if (ends_with(dt, "#geoJSONLiteral") || ends_with(dt, "/vnd.geo+json")) {
    geo.encoding = GeometryEncoding::geojson;
    return geo;
  }
  const std::string_view text = trim(value.lexical());
  if (auto shape = parse_wkt(text)) {
    geo.encoding = GeometryEncoding::wkt;
    geo.shape = std::move(shape);
  } else if (!text.empty() && text.front() == '{') {
    geo.encoding = GeometryEncoding::geojson;
  } else if (!text.empty() && text.front() == '<' && text.find("<http") != 0) {
    geo.encoding = GeometryEncoding::gml;
  } else {
    geo.unparseable = true;
  }
  return geo;
}

bool within_extents(const WktPolygon& polygon, const WktPoint& point) {
  if (polygon.rings.empty() || polygon.rings.front().empty()) return false;
  const auto& ring = polygon.rings.front();
  auto [min_x, max_x] = std::minmax_element(ring.begin(), ring.end(), [](auto& a, auto& b) { return a.x < b.x; });
  auto [min_y, max_y] = std::minmax_element(ring.begin(), ring.end(), [](auto& a, auto& b) { return a.y < b.y; });
  return point.x >= min_x->x && point.x <= max_x->x && point.y >= min_y->y && point.y <= max_y->y;
}

bool Location::centroid_within_bbox() const {
  for (const Geometry& box : bboxes) {
    const auto* poly = box.shape ? std::get_if<WktPolygon>(&*box.shape) : nullptr;
    if (poly == nullptr) continue;
    for (const Geometry& c : centroids) {
      const auto* point = c.shape ? std::get_if<WktPoint>(&*c.shape) : nullptr;
      if (point != nullptr && !within_extents(*poly, *point)) return false;
    }
  }
  return true;
}

Location parse_location(const rdf::Graph& g, const rdf::Term& node) {
  Location loc{node, {}, {}, {}};
  if (node.is_literal()) return loc;
  loc.geometries = geometries_of(g, node, terms::locn::geometry);
  loc.bboxes = geometries_of(g, node, terms::dcat::bbox);
  loc.centroids = geometries_of(g, node, terms::dcat::centroid);
  return loc;
}

}  // namespace dcatkit::dcat

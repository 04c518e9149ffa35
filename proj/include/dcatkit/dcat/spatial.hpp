#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "dcatkit/rdf/graph.hpp"

namespace dcatkit::dcat {

struct WktPoint {
  double x = 0;
  double y = 0;
};

struct WktPolygon {
  std::vector<std::vector<WktPoint>> rings;  // first ring is the exterior
};

using WktShape = std::variant<WktPoint, WktPolygon>;

/// POINT and POLYGON only, with an optional leading "<crs-iri>". Rings must
/// have at least four positions and be closed.
std::optional<WktShape> parse_wkt(std::string_view text);

enum class GeometryEncoding { wkt, gml, geojson, unknown };

struct Geometry {
  rdf::Term literal;
  GeometryEncoding encoding = GeometryEncoding::unknown;
  std::optional<WktShape> shape;  // set for parseable WKT
  /// WKT (by datatype or by shape of the text) that failed to parse, or a
  /// non-literal value.
  bool unparseable = false;
};

Geometry classify_geometry(const rdf::Term& value);

struct Location {
  rdf::Term node;
  std::vector<Geometry> geometries;  // locn:geometry
  std::vector<Geometry> bboxes;      // dcat:bbox
  std::vector<Geometry> centroids;   // dcat:centroid

  /// True unless a parsed bbox polygon and a parsed centroid point exist
  /// and the point falls outside the polygon's x/y extents.
  bool centroid_within_bbox() const;
};

Location parse_location(const rdf::Graph& g, const rdf::Term& node);

/// Inclusive x/y extents test.
bool within_extents(const WktPolygon& polygon, const WktPoint& point);

}  // namespace dcatkit::dcat

#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcatkit/rdf/graph.hpp"
#include "dcatkit/syntax/diagnostics.hpp"

namespace dcatkit::harvest {

using Clock = std::chrono::system_clock;
using Timestamp = Clock::time_point;

struct HarvestSource {
  std::string url;  // absolute http(s)
  std::optional<std::string> preferred_format;  // media type placed first in Accept
  std::optional<Timestamp> last_fetch;
  std::optional<std::string> etag;  // sent as If-None-Match
};

enum class FetchStatus { ok, not_modified, failed };

enum class FetchErrorKind { invalid_url, connection, timeout, http_error, too_many_redirects, unsupported_content_type, parse };

struct FetchError {
  FetchErrorKind kind = FetchErrorKind::connection;
  int http_status = 0;
  std::string message;
};

struct HarvestResult {
  HarvestSource source;
  FetchStatus status = FetchStatus::failed;
  std::optional<rdf::Graph> graph;  // present when status is ok
  syntax::ParseDiagnostics diagnostics;
  Timestamp fetched_at{};
  std::optional<FetchError> error;
  std::string final_url;     // after redirects
  std::string content_type;  // as served
  std::optional<std::string> etag;  // as served
};

std::string_view to_string(FetchStatus s);
std::string_view to_string(FetchErrorKind k);

/// One GET with RDF content negotiation, following at most five redirects.
/// Never throws; failures are reported in the result.
HarvestResult fetch_catalog(const HarvestSource& src, std::chrono::milliseconds timeout);

struct HarvestOptions {
  std::size_t max_parallel = 4;
  std::chrono::milliseconds timeout{10000};
  /// Replaces fetch_catalog, e.g. for tests.
  std::function<HarvestResult(const HarvestSource&)> fetch;
};

struct HarvestOutput {
  rdf::Graph graph;  // merged documents plus catalog records
  std::vector<HarvestResult> results;  // in source order
};

/// Fetches every source with at most max_parallel requests in flight and
/// merges the documents (blank nodes renamed apart). Each harvested
/// resource gets a dcat:CatalogRecord blank node with foaf:primaryTopic,
/// dcterms:issued (first seen in this batch) and dcterms:modified (fetch
/// time); records already present in a document are kept and only missing
/// dates are added. Failed sources never abort the batch.
HarvestOutput harvest(const std::vector<HarvestSource>& sources, const HarvestOptions& options = {});

/// True when a HEAD request (following redirects) ends in a 2xx status.
bool dereferences(const std::string& url, std::chrono::milliseconds timeout);

/// xsd:dateTime in UTC, second precision, e.g. 2024-01-31T08:00:00Z.
std::string format_timestamp(Timestamp t);

/// Reads a sources file: one URL per line, '#' comments and blank lines
/// ignored.
std::vector<HarvestSource> parse_sources(std::string_view text);

/// JSON summary of a harvest: one entry per source.
std::string results_to_json(const std::vector<HarvestResult>& results, int indent = 2);

}  // namespace dcatkit::harvest

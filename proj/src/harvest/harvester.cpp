#include "dcatkit/harvest/harvester.hpp"

#include <algorithm>
#include <atomic>
#include <ctime>
#include <map>
#include <set>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "dcatkit/dcat/terms.hpp"
#include "dcatkit/dcat/views.hpp"
#include "dcatkit/dcat/vocabulary.hpp"
#include "dcatkit/rdf/namespaces.hpp"
#include "dcatkit/syntax/format.hpp"
#include "dcatkit/syntax/turtle.hpp"

namespace dcatkit::harvest {

using rdf::Term;

namespace {

constexpr int kMaxRedirects = 5;

struct UrlParts {
  std::string origin;  // scheme://authority
  std::string target;  // path and query, never empty
  bool https = false;
};

std::optional<UrlParts> split_url(std::string_view url) {
  UrlParts parts;
  std::size_t rest = 0;
  if (url.rfind("http://", 0) == 0) {
    rest = 7;
  } else if (url.rfind("https://", 0) == 0) {
    rest = 8;
    parts.https = true;
  } else {
    return std::nullopt;
  }
  const std::size_t slash = url.find_first_of("/?#", rest);
  const std::string_view authority = url.substr(rest, slash == std::string_view::npos ? url.npos : slash - rest);
  if (authority.empty()) return std::nullopt;
  parts.origin = std::string(url.substr(0, rest)) + std::string(authority);
  if (slash != std::string_view::npos) {
    std::string_view target = url.substr(slash);
    target = target.substr(0, target.find('#'));
    parts.target = std::string(target);
  }
  if (parts.target.empty() || parts.target.front() != '/') parts.target.insert(0, "/");
  return parts;
}

bool is_redirect(int status) {
  return status == 301 || status == 302 || status == 303 || status == 307 || status == 308;
}

struct Response {
  std::optional<httplib::Response> response;
  std::string final_url;
  std::optional<FetchError> error;
};

// Issues GET or HEAD and follows redirects by hand so the final URL is known.
Response request(const std::string& method, const std::string& url, const httplib::Headers& headers,
                 std::chrono::milliseconds timeout) {
  Response out;
  out.final_url = url;
  const auto started = std::chrono::steady_clock::now();
  for (int hop = 0;; ++hop) {
    const auto parts = split_url(out.final_url);
    if (!parts) {
      out.error = FetchError{FetchErrorKind::invalid_url, 0, "not an absolute http(s) URL: " + out.final_url};
      return out;
    }
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
    if (parts->https) {
      out.error = FetchError{FetchErrorKind::connection, 0, "built without TLS support: " + out.final_url};
      return out;
    }
#endif
    httplib::Client client(parts->origin);
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout);
    const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout - secs);
    client.set_connection_timeout(secs.count(), usecs.count());
    client.set_read_timeout(secs.count(), usecs.count());
    client.set_write_timeout(secs.count(), usecs.count());
    client.set_follow_location(false);
    auto res = method == "HEAD" ? client.Head(parts->target, headers) : client.Get(parts->target, headers);
    if (!res) {
      const auto err = res.error();
      const bool timed_out = err == httplib::Error::ConnectionTimeout ||
                             std::chrono::steady_clock::now() - started >= timeout;
      out.error = FetchError{timed_out ? FetchErrorKind::timeout : FetchErrorKind::connection, 0,
                             httplib::to_string(err) + ": " + out.final_url};
      return out;
    }
    if (is_redirect(res->status) && res->has_header("Location")) {
      if (hop == kMaxRedirects) {
        out.error = FetchError{FetchErrorKind::too_many_redirects, res->status,
                               "more than " + std::to_string(kMaxRedirects) + " redirects"};
        return out;
      }
      out.final_url = syntax::resolve_iri(out.final_url, res->get_header_value("Location"));
      continue;
    }
    out.response = std::move(*res);
    return out;
  }
}

std::string accept_header(const HarvestSource& src) {
  std::vector<std::string> types;
  if (src.preferred_format && !src.preferred_format->empty()) types.push_back(*src.preferred_format);
  for (const char* t : {"text/turtle", "application/n-triples"}) {
    if (std::find(types.begin(), types.end(), t) == types.end()) types.emplace_back(t);
  }
  std::string out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) out += ", ";
    out += types[i];
    // Lower preference for everything after the first entry.
    if (i) out += ";q=0." + std::to_string(std::max<int>(1, 9 - static_cast<int>(i)));
  }
  return out;
}

Term datetime_literal(Timestamp t) {
  return Term::literal(format_timestamp(t), std::string(ns::xsd) + "dateTime");
}

bool catalogs_resource(const rdf::Graph& closed, const Term& catalog, const Term& resource) {
  return closed.contains(catalog, terms::dcterms::hasPart, resource);
}

// Document plus its catalog records, still in the document's blank-label space.
rdf::Graph with_records(const rdf::Graph& doc, Timestamp fetched, const std::map<Term, Timestamp>& first_seen) {
  rdf::Graph out = doc;
  const rdf::Graph closed = dcat::infer_closure(doc);
  const std::vector<Term> resources = dcat::instances_of(closed, terms::dcat::Resource);
  const std::vector<Term> catalogs = dcat::instances_of(closed, terms::dcat::Catalog);
  const std::vector<Term> records = dcat::record_nodes(closed);
  const Term issued_value = datetime_literal(fetched);

  for (const Term& r : resources) {
    auto seen = first_seen.find(r);
    const Term issued = seen == first_seen.end() ? issued_value : datetime_literal(seen->second);
    std::vector<Term> existing;
    for (const Term& rec : records) {
      if (closed.contains(rec, terms::foaf::primaryTopic, r)) existing.push_back(rec);
    }
    if (!existing.empty()) {
      for (const Term& rec : existing) {
        if (closed.objects(rec, terms::dcterms::issued).empty()) out.insert(rec, terms::dcterms::issued, issued);
        if (closed.objects(rec, terms::dcterms::modified).empty()) out.insert(rec, terms::dcterms::modified, issued_value);
      }
      continue;
    }
    const Term rec = Term::blank(out.fresh_blank_label("rec"));
    out.insert(rec, terms::rdf_::type, terms::dcat::CatalogRecord);
    out.insert(rec, terms::foaf::primaryTopic, r);
    out.insert(rec, terms::dcterms::issued, issued);
    out.insert(rec, terms::dcterms::modified, issued_value);
    for (const Term& c : catalogs) {
      if (c != r && catalogs_resource(closed, c, r)) out.insert(c, terms::dcat::record, rec);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(FetchStatus s) {
  switch (s) {
    case FetchStatus::ok: return "ok";
    case FetchStatus::not_modified: return "not-modified";
    case FetchStatus::failed: return "failed";
  }
  return "failed";
}

std::string_view to_string(FetchErrorKind k) {
  switch (k) {
    case FetchErrorKind::invalid_url: return "InvalidUrl";
    case FetchErrorKind::connection: return "ConnectionError";
    case FetchErrorKind::timeout: return "Timeout";
    case FetchErrorKind::http_error: return "HttpError";
    case FetchErrorKind::too_many_redirects: return "TooManyRedirects";
    case FetchErrorKind::unsupported_content_type: return "UnsupportedContentType";
    case FetchErrorKind::parse: return "ParseError";
  }
  return "ConnectionError";
}

HarvestResult fetch_catalog(const HarvestSource& src, std::chrono::milliseconds timeout) {
  HarvestResult result;
  result.source = src;
  result.fetched_at = Clock::now();
  httplib::Headers headers{{"Accept", accept_header(src)}};
  if (src.etag) headers.emplace("If-None-Match", *src.etag);

  Response res = request("GET", src.url, headers, timeout);
  result.final_url = res.final_url;
  if (res.error) {
    result.error = std::move(res.error);
    return result;
  }
  const httplib::Response& r = *res.response;
  if (r.has_header("ETag")) result.etag = r.get_header_value("ETag");
  result.content_type = r.get_header_value("Content-Type");
  if (r.status == 304) {
    result.status = FetchStatus::not_modified;
    if (!result.etag) result.etag = src.etag;
    return result;
  }
  if (r.status < 200 || r.status >= 300) {
    result.error = FetchError{FetchErrorKind::http_error, r.status, "HTTP " + std::to_string(r.status)};
    return result;
  }
  const auto format = syntax::format_from_media_type(result.content_type);
  if (!format || *format == syntax::RdfFormat::jsonld) {
    result.error = FetchError{FetchErrorKind::unsupported_content_type, r.status,
                              "cannot parse Content-Type '" + result.content_type + "'"};
    return result;
  }
  syntax::ParseResult parsed = syntax::parse(r.body, *format, result.final_url);
  result.diagnostics = std::move(parsed.diagnostics);
  if (!result.diagnostics.ok()) {
    result.error = FetchError{FetchErrorKind::parse, r.status, result.diagnostics.errors.front().to_string()};
    return result;
  }
  result.graph = std::move(parsed.graph);
  result.status = FetchStatus::ok;
  return result;
}

HarvestOutput harvest(const std::vector<HarvestSource>& sources, const HarvestOptions& options) {
  HarvestOutput out;
  out.graph.prefixes() = rdf::default_prefixes();
  out.results.resize(sources.size());
  if (sources.empty()) return out;

  auto fetch = options.fetch ? options.fetch
                             : [timeout = options.timeout](const HarvestSource& s) { return fetch_catalog(s, timeout); };
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < sources.size(); i = next++) {
      try {
        out.results[i] = fetch(sources[i]);
      } catch (const std::exception& e) {
        HarvestResult failed;
        failed.source = sources[i];
        failed.fetched_at = Clock::now();
        failed.error = FetchError{FetchErrorKind::connection, 0, e.what()};
        out.results[i] = std::move(failed);
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(options.max_parallel, 1, sources.size());
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  // Earliest fetch per IRI resource across the batch; blank resources are
  // document-local and use their own fetch time.
  std::map<Term, Timestamp> first_seen;
  for (const HarvestResult& r : out.results) {
    if (r.status != FetchStatus::ok || !r.graph) continue;
    for (const Term& res : dcat::instances_of(dcat::infer_closure(*r.graph), terms::dcat::Resource)) {
      if (!res.is_iri()) continue;
      auto [it, inserted] = first_seen.emplace(res, r.fetched_at);
      if (!inserted) it->second = std::min(it->second, r.fetched_at);
    }
  }
  for (const HarvestResult& r : out.results) {
    if (r.status != FetchStatus::ok || !r.graph) continue;
    out.graph = rdf::graph_merge(out.graph, with_records(*r.graph, r.fetched_at, first_seen));
  }
  return out;
}

bool dereferences(const std::string& url, std::chrono::milliseconds timeout) {
  Response res = request("HEAD", url, {}, timeout);
  return !res.error && res.response->status >= 200 && res.response->status < 300;
}

std::string format_timestamp(Timestamp t) {
  const std::time_t secs = Clock::to_time_t(t);
  std::tm utc{};
  gmtime_r(&secs, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::vector<HarvestSource> parse_sources(std::string_view text) {
  std::vector<HarvestSource> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos && (hash == 0 || line[hash - 1] == ' ' || line[hash - 1] == '\t')) {
      line = line.substr(0, hash);
    }
    const std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) continue;
    const std::size_t e = line.find_last_not_of(" \t\r");
    out.push_back(HarvestSource{std::string(line.substr(b, e - b + 1)), std::nullopt, std::nullopt, std::nullopt});
  }
  return out;
}

std::string results_to_json(const std::vector<HarvestResult>& results, int indent) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const HarvestResult& r : results) {
    nlohmann::ordered_json entry;
    entry["url"] = r.source.url;
    entry["status"] = to_string(r.status);
    entry["final_url"] = r.final_url;
    entry["content_type"] = r.content_type;
    entry["etag"] = r.etag ? nlohmann::ordered_json(*r.etag) : nlohmann::ordered_json(nullptr);
    entry["fetched_at"] = format_timestamp(r.fetched_at);
    entry["triples"] = r.graph ? r.graph->size() : 0;
    if (r.error) {
      entry["error"] = {{"kind", to_string(r.error->kind)}, {"http_status", r.error->http_status},
                        {"message", r.error->message}};
    } else {
      entry["error"] = nullptr;
    }
    nlohmann::ordered_json diags = nlohmann::ordered_json::array();
    for (const auto& d : r.diagnostics.errors) diags.push_back({{"severity", "error"}, {"message", d.to_string()}});
    for (const auto& d : r.diagnostics.warnings) diags.push_back({{"severity", "warning"}, {"message", d.to_string()}});
    entry["diagnostics"] = std::move(diags);
    doc.push_back(std::move(entry));
  }
  return doc.dump(indent);
}

}  // namespace dcatkit::harvest

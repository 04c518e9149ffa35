#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcatkit/crosswalk/citation.hpp"
#include "dcatkit/crosswalk/schema_org.hpp"
#include "dcatkit/dcat/terms.hpp"
#include "dcatkit/dcat/views.hpp"
#include "dcatkit/dcat/vocabulary.hpp"
#include "dcatkit/error.hpp"
#include "dcatkit/harvest/harvester.hpp"
#include "dcatkit/syntax/format.hpp"
#include "dcatkit/syntax/jsonld.hpp"
#include "dcatkit/syntax/turtle.hpp"
#include "dcatkit/validate/validator.hpp"

namespace dcatkit::cli {

namespace {

using rdf::Graph;
using rdf::Term;

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
};

// Thrown by command bodies to end the run with a given exit code.
struct Exit {
  int code;
};

bool is_url(std::string_view s) { return s.rfind("http://", 0) == 0 || s.rfind("https://", 0) == 0; }

std::string read_text(const std::string& path, Io& io) {
  if (path == "-") {
    std::ostringstream buf;
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    io.err << "error: cannot read " << path << "\n";
    throw Exit{kFailure};
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text, Io& io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    io.err << "error: cannot write " << path << "\n";
    throw Exit{kFailure};
  }
}

std::string file_base(const std::string& path) {
  std::error_code ec;
  const auto abs = std::filesystem::absolute(path, ec);
  return ec ? std::string("file:///") : "file://" + abs.generic_string();
}

void report_diagnostics(const std::string& source, const syntax::ParseDiagnostics& d, Io& io) {
  for (const auto& w : d.warnings) io.err << source << ":" << w.to_string() << " (warning)\n";
  for (const auto& e : d.errors) io.err << source << ":" << e.to_string() << "\n";
}

Graph load_graph(const std::string& input, const std::string& input_format, Io& io) {
  if (is_url(input)) {
    harvest::HarvestSource src{input, std::nullopt, std::nullopt, std::nullopt};
    if (!input_format.empty()) {
      const auto f = syntax::format_from_name(input_format);
      if (!f) {
        io.err << "error: unknown input format '" << input_format << "'\n";
        throw Exit{kUsage};
      }
      src.preferred_format = std::string(syntax::media_type(*f));
    }
    harvest::HarvestResult r = harvest::fetch_catalog(src, std::chrono::seconds(30));
    report_diagnostics(input, r.diagnostics, io);
    if (r.status != harvest::FetchStatus::ok) {
      io.err << "error: " << input << ": " << (r.error ? r.error->message : "fetch failed") << "\n";
      throw Exit{kFailure};
    }
    return std::move(*r.graph);
  }
  std::optional<syntax::RdfFormat> format;
  if (!input_format.empty()) {
    format = syntax::format_from_name(input_format);
    if (!format) {
      io.err << "error: unknown input format '" << input_format << "'\n";
      throw Exit{kUsage};
    }
  } else if (input == "-") {
    format = syntax::RdfFormat::turtle;
  } else {
    format = syntax::format_from_extension(input);
    if (!format) {
      io.err << "error: cannot infer the format of " << input << "; use --input-format\n";
      throw Exit{kUsage};
    }
  }
  const std::string text = read_text(input, io);
  const std::string base = input == "-" ? std::string("file:///stdin") : file_base(input);
  syntax::ParseResult parsed = syntax::parse(text, *format, base);
  report_diagnostics(input, parsed.diagnostics, io);
  if (!parsed.ok()) throw Exit{kFailure};
  return std::move(parsed.graph);
}

Term iri_argument(const std::string& value, const char* flag, Io& io) {
  try {
    return rdf::make_iri(value);
  } catch (const Error&) {
    io.err << "error: " << flag << " needs an absolute IRI, got '" << value << "'\n";
    throw Exit{kUsage};
  }
}

struct ValidateArgs {
  std::string input;
  std::string input_format;
  std::string min_severity = "info";
  std::vector<std::string> rules;
  std::string format = "text";
  bool network_ids = false;
};

int cmd_validate(const ValidateArgs& a, Io& io) {
  const Graph closed = dcat::infer_closure(load_graph(a.input, a.input_format, io));
  validate::ValidationOptions options;
  options.min_severity = *validate::severity_from_string(a.min_severity);
  if (!a.rules.empty()) options.rules = std::set<std::string>(a.rules.begin(), a.rules.end());
  options.network_ids = a.network_ids;
  options.dereference = [](const std::string& url) { return harvest::dereferences(url, std::chrono::seconds(10)); };
  validate::ValidationReport report;
  try {
    report = validate::validate(closed, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownRuleId) throw;
    io.err << "error: " << e.what() << "\n";
    return kUsage;
  }
  io.out << (a.format == "json" ? report.to_json() : report.to_text());
  return report.count(validate::Severity::error) > 0 ? kValidationErrors : kSuccess;
}

struct ConvertArgs {
  std::string input;
  std::string input_format;
  std::string to;
  std::string format = "turtle";
  std::string root;
  std::string out;
};

int cmd_convert(const ConvertArgs& a, Io& io) {
  const Graph closed = dcat::infer_closure(load_graph(a.input, a.input_format, io));
  std::vector<Term> roots;
  if (!a.root.empty()) {
    roots.push_back(iri_argument(a.root, "--root", io));
  } else {
    roots = dcat::instances_of(closed, terms::dcat::Dataset);
    if (roots.empty()) roots = dcat::distribution_nodes(closed);
  }
  if (roots.empty()) {
    io.err << "error: no dataset or distribution to export\n";
    return kUsage;
  }
  Graph exported;
  std::set<std::pair<rdf::Triple, std::string>> losses;
  for (const Term& root : roots) {
    crosswalk::CrosswalkResult r;
    try {
      r = crosswalk::to_schema_org(closed, root);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RootNotExportable) throw;
      io.err << "error: " << e.what() << "\n";
      return kUsage;
    }
    exported = rdf::graph_merge(exported, r.graph, rdf::BlankNodePolicy::keep);
    for (auto& loss : r.losses) losses.emplace(loss.triple, loss.reason);
  }
  for (const auto& [t, reason] : losses) {
    io.err << "not exported: " << t.subject.to_string() << " " << t.predicate.to_string() << " "
           << t.object.to_string() << " (" << reason << ")\n";
  }
  write_text(a.out, a.format == "jsonld" ? syntax::emit_jsonld(exported) + "\n" : syntax::serialize_turtle(exported), io);
  return kSuccess;
}

struct CiteArgs {
  std::string input;
  std::string input_format;
  std::string dataset;
  std::string format = "text";
};

int cmd_cite(const CiteArgs& a, Io& io) {
  const Graph closed = dcat::infer_closure(load_graph(a.input, a.input_format, io));
  const Term node = iri_argument(a.dataset, "--dataset", io);
  crosswalk::CitationRecord rec;
  try {
    rec = crosswalk::to_citation(closed, node);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotADataset) throw;
    io.err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (!rec.complete()) {
    io.err << "incomplete citation, missing:";
    for (const auto& m : rec.missing) io.err << " " << m;
    io.err << "\n";
  }
  io.out << (a.format == "json" ? rec.to_json() : crosswalk::format_citation(rec)) << "\n";
  return kSuccess;
}

struct HarvestArgs {
  std::string sources;
  std::size_t parallel = 4;
  std::string out;
  std::string report;
  double timeout = 30;
};

int cmd_harvest(const HarvestArgs& a, Io& io) {
  const std::vector<harvest::HarvestSource> sources = harvest::parse_sources(read_text(a.sources, io));
  harvest::HarvestOptions options;
  options.max_parallel = a.parallel;
  options.timeout = std::chrono::milliseconds(static_cast<long long>(a.timeout * 1000));
  const harvest::HarvestOutput result = harvest::harvest(sources, options);
  bool failed = false;
  for (const auto& r : result.results) {
    report_diagnostics(r.source.url, r.diagnostics, io);
    if (r.status == harvest::FetchStatus::failed) {
      failed = true;
      io.err << "failed: " << r.source.url << ": " << (r.error ? r.error->message : "unknown error") << "\n";
    }
  }
  write_text(a.out, syntax::serialize_turtle(result.graph), io);
  if (!a.report.empty()) {
    if (a.report == "-" && (a.out.empty() || a.out == "-")) {
      io.err << "error: --report - needs --out\n";
      return kUsage;
    }
    write_text(a.report, harvest::results_to_json(result.results) + "\n", io);
  }
  return failed ? kFailure : kSuccess;
}

struct StatsArgs {
  std::string input;
  std::string input_format;
  std::string format = "text";
};

int cmd_stats(const StatsArgs& a, Io& io) {
  const Graph asserted = load_graph(a.input, a.input_format, io);
  const Graph closed = dcat::infer_closure(asserted);
  const std::vector<std::pair<std::string, std::size_t>> counts = {
      {"triples", asserted.size()},
      {"catalogs", dcat::instances_of(closed, terms::dcat::Catalog).size()},
      {"datasets", dcat::instances_of(closed, terms::dcat::Dataset).size()},
      {"services", dcat::instances_of(closed, terms::dcat::DataService).size()},
      {"distributions", dcat::distribution_nodes(closed).size()},
      {"records", dcat::record_nodes(closed).size()},
  };
  if (a.format == "json") {
    nlohmann::ordered_json doc;
    for (const auto& [name, n] : counts) doc[name] = n;
    io.out << doc.dump(2) << "\n";
  } else {
    for (const auto& [name, n] : counts) io.out << name << ": " << n << "\n";
  }
  return kSuccess;
}

int cmd_rules(Io& io) {
  for (const auto& r : validate::list_rules()) {
    io.out << r.id << "\t" << validate::to_string(r.severity) << "\t" << r.requirement << "\t" << r.description << "\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Io io{out, err, in};
  CLI::App app{"DCAT 2 catalog toolkit", "dcatkit"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  const auto input_format_opt = [](CLI::App* sub, std::string& target) {
    sub->add_option("--input-format", target, "Input syntax (turtle or ntriples); inferred from the extension");
  };

  ValidateArgs va;
  auto* validate_cmd = app.add_subcommand("validate", "Check a catalog against the DCAT 2 rules");
  validate_cmd->add_option("input", va.input, "File, URL, or - for stdin")->required();
  validate_cmd->add_option("--min-severity", va.min_severity)->check(CLI::IsMember({"error", "warning", "info"}));
  validate_cmd->add_option("--rules", va.rules, "Comma-separated rule ids")->delimiter(',');
  validate_cmd->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));
  validate_cmd->add_flag("--network-ids", va.network_ids, "Dereference HTTP identifiers");
  input_format_opt(validate_cmd, va.input_format);

  ConvertArgs ca;
  auto* convert_cmd = app.add_subcommand("convert", "Export datasets as Schema.org");
  convert_cmd->add_option("input", ca.input, "File, URL, or - for stdin")->required();
  convert_cmd->add_option("--to", ca.to)->required()->check(CLI::IsMember({"schema-org"}));
  convert_cmd->add_option("--format", ca.format)->check(CLI::IsMember({"turtle", "jsonld"}));
  convert_cmd->add_option("--root", ca.root, "Dataset or distribution IRI; default every dataset");
  convert_cmd->add_option("--out", ca.out, "Output file; default stdout");
  input_format_opt(convert_cmd, ca.input_format);

  CiteArgs ci;
  auto* cite_cmd = app.add_subcommand("cite", "Build a DataCite citation for a dataset");
  cite_cmd->add_option("input", ci.input, "File, URL, or - for stdin")->required();
  cite_cmd->add_option("--dataset", ci.dataset)->required();
  cite_cmd->add_option("--format", ci.format)->check(CLI::IsMember({"text", "json"}));
  input_format_opt(cite_cmd, ci.input_format);

  HarvestArgs ha;
  auto* harvest_cmd = app.add_subcommand("harvest", "Fetch and merge remote catalogs");
  harvest_cmd->add_option("--sources", ha.sources, "File with one URL per line")->required();
  harvest_cmd->add_option("--parallel", ha.parallel, "Maximum concurrent fetches")->check(CLI::PositiveNumber);
  harvest_cmd->add_option("--out", ha.out, "Merged Turtle output; default stdout");
  harvest_cmd->add_option("--report", ha.report, "Per-source JSON report");
  harvest_cmd->add_option("--timeout", ha.timeout, "Per-request timeout in seconds")->check(CLI::PositiveNumber);

  StatsArgs sa;
  auto* stats_cmd = app.add_subcommand("stats", "Count catalog entities after inference");
  stats_cmd->add_option("input", sa.input, "File, URL, or - for stdin")->required();
  stats_cmd->add_option("--format", sa.format)->check(CLI::IsMember({"text", "json"}));
  input_format_opt(stats_cmd, sa.input_format);

  auto* rules_cmd = app.add_subcommand("rules", "List the validation rules");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(va, io);
    if (*convert_cmd) return cmd_convert(ca, io);
    if (*cite_cmd) return cmd_cite(ci, io);
    if (*harvest_cmd) return cmd_harvest(ha, io);
    if (*stats_cmd) return cmd_stats(sa, io);
    if (*rules_cmd) return cmd_rules(io);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace dcatkit::cli

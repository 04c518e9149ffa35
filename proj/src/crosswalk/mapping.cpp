#include "dcatkit/crosswalk/mapping.hpp"

#include <set>

#include "dcatkit/error.hpp"
#include "dcatkit/rdf/namespaces.hpp"
#include "dcatkit/rdf/term.hpp"

namespace dcatkit::data {
extern const std::string_view schema_org_mapping_tsv;
}

namespace dcatkit::crosswalk {

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    cells.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return cells;
}

[[noreturn]] void corrupt(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::CorruptDataFile, "mapping table line " + std::to_string(line) + ": " + why);
}

}  // namespace

const MappingEntry* MappingTable::find_class(const std::string& iri) const {
  auto it = classes_.find(iri);
  return it == classes_.end() ? nullptr : &it->second;
}

const MappingEntry* MappingTable::find_property(const std::string& iri) const {
  auto it = properties_.find(iri);
  return it == properties_.end() ? nullptr : &it->second;
}

std::string MappingTable::unmapped_reason(const std::string& iri) const {
  auto it = unmapped_.find(iri);
  return it == unmapped_.end() ? std::string() : it->second;
}

std::string_view conversion_name(Conversion c) {
  switch (c) {
    case Conversion::copy: return "copy";
    case Conversion::media_type: return "media-type";
    case Conversion::interval: return "interval";
  }
  return "";
}

MappingTable parse_mapping_table(std::string_view text) {
  MappingTable table;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  auto expand = [&](const std::string& curie) {
    const auto colon = curie.find(':');
    if (colon == std::string::npos) corrupt(line_no, "expected a prefixed name, got '" + curie + "'");
    auto it = table.prefixes_.find(curie.substr(0, colon));
    if (it == table.prefixes_.end()) corrupt(line_no, "unknown prefix in '" + curie + "'");
    return it->second + curie.substr(colon + 1);
  };
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto cells = split_tabs(line);
    const std::string& kind = cells[0];
    if (kind == "prefix") {
      if (cells.size() != 3 || !rdf::is_absolute_iri(cells[2])) corrupt(line_no, "malformed prefix row");
      table.prefixes_[cells[1]] = cells[2];
      continue;
    }
    if (cells.size() != 6) corrupt(line_no, "expected 6 columns, found " + std::to_string(cells.size()));
    const std::string source = expand(cells[1]);
    if (!seen.insert(source).second) corrupt(line_no, "term listed twice: " + cells[1]);
    if (kind == "unmapped") {
      if (cells[5].empty()) corrupt(line_no, "unmapped term without a reason");
      table.unmapped_[source] = cells[5];
      continue;
    }
    if (kind != "class" && kind != "property") corrupt(line_no, "unknown row kind '" + kind + "'");
    MappingEntry entry{source, expand(cells[2]), Conversion::copy, cells[4], cells[5]};
    if (entry.target.rfind(ns::sdo, 0) != 0) corrupt(line_no, "target outside the Schema.org namespace");
    if (cells[3] == "media-type") {
      entry.conversion = Conversion::media_type;
    } else if (cells[3] == "interval") {
      entry.conversion = Conversion::interval;
    } else if (cells[3] != "copy") {
      corrupt(line_no, "unknown conversion '" + cells[3] + "'");
    }
    (kind == "class" ? table.classes_ : table.properties_).emplace(source, std::move(entry));
  }
  return table;
}

const MappingTable& load_mapping_table() {
  static const MappingTable table = parse_mapping_table(data::schema_org_mapping_tsv);
  return table;
}

}  // namespace dcatkit::crosswalk

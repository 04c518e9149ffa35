#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dcatkit::crosswalk {

/// Requirement handle answered by every mapped row.
inline constexpr const char* kMappingRequirement = "RES";

enum class Conversion { copy, media_type, interval };

struct MappingEntry {
  std::string source;  // full IRI
  std::string target;  // full Schema.org IRI
  Conversion conversion = Conversion::copy;
  std::string origin;  // "recommendation" or "editorial"
  std::string note;
};

/// DCAT-side terms and their Schema.org counterparts. Shipped as a TSV data
/// file; each source term is either mapped or listed as unmapped with a
/// reason.
class MappingTable {
 public:
  const std::map<std::string, MappingEntry>& classes() const noexcept { return classes_; }
  const std::map<std::string, MappingEntry>& properties() const noexcept { return properties_; }
  /// Source IRI to reason.
  const std::map<std::string, std::string>& unmapped() const noexcept { return unmapped_; }
  const std::map<std::string, std::string>& prefixes() const noexcept { return prefixes_; }

  const MappingEntry* find_class(const std::string& iri) const;
  const MappingEntry* find_property(const std::string& iri) const;
  /// Reason for an unmapped term; empty when the term is not listed.
  std::string unmapped_reason(const std::string& iri) const;

 private:
  friend MappingTable parse_mapping_table(std::string_view text);

  std::map<std::string, MappingEntry> classes_;
  std::map<std::string, MappingEntry> properties_;
  std::map<std::string, std::string> unmapped_;
  std::map<std::string, std::string> prefixes_;
};

/// Throws Error(CorruptDataFile) on malformed rows, unknown prefixes or a
/// term listed twice.
MappingTable parse_mapping_table(std::string_view text);
const MappingTable& load_mapping_table();

std::string_view conversion_name(Conversion c);

}  // namespace dcatkit::crosswalk

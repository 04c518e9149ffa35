#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dcatkit/rdf/graph.hpp"

namespace dcatkit::dcat {

/// Seconds component of a duration, kept as decimal text so that
/// "1.50" and "1.5" stay distinguishable and nothing is rounded.
struct DecimalSeconds {
  std::uint64_t whole = 0;
  std::string fraction;  // digits after the point, possibly empty

  friend bool operator==(const DecimalSeconds&, const DecimalSeconds&) = default;
};

/// xsd:duration, structured. Components absent from the lexical form are
/// nullopt; nothing is normalized.
struct Duration {
  int sign = 1;
  std::optional<std::uint64_t> years;
  std::optional<std::uint64_t> months;
  std::optional<std::uint64_t> days;
  std::optional<std::uint64_t> hours;
  std::optional<std::uint64_t> minutes;
  std::optional<DecimalSeconds> seconds;

  friend bool operator==(const Duration&, const Duration&) = default;
};

/// Parses PnYnMnDTnHnMnS; throws Error(InvalidDuration).
Duration parse_duration(std::string_view lexical);
/// Canonical lexical form of the components that are present.
std::string format_duration(const Duration& d);

/// A calendar value from an xsd:date, xsd:dateTime, xsd:gYear or
/// xsd:gYearMonth lexical form. Time zones are ignored.
struct DateValue {
  enum class Precision { year, month, day, time };

  int year = 0;
  int month = 1;
  int day = 1;
  int seconds_of_day = 0;
  Precision precision = Precision::day;

  /// First and last instant covered, as comparable tuples.
  std::array<int, 4> lower() const;
  std::array<int, 4> upper() const;
};

std::optional<DateValue> parse_date_value(std::string_view lexical);

/// One end of a period: the literal found and where it came from.
struct TemporalBound {
  rdf::Term value;
  rdf::Term predicate;  // dcat:startDate, dcat:endDate, time:hasBeginning or time:hasEnd
  std::optional<DateValue> parsed;
};

struct PeriodOfTime {
  rdf::Term node;
  std::optional<TemporalBound> start;
  std::optional<TemporalBound> end;
  /// Time-ontology bounds that lost to a DCAT property on the same node.
  std::optional<TemporalBound> shadowed_start;
  std::optional<TemporalBound> shadowed_end;

  /// False only when both bounds parse and the start lies after the end.
  bool ordered() const;
};

/// Throws Error(EmptyPeriod) when the node has no usable bound.
PeriodOfTime parse_period(const rdf::Graph& g, const rdf::Term& node);

/// Lexical form of a temporal bound as a date or date-time string.
std::string bound_text(const TemporalBound& b);

}  // namespace dcatkit::dcat

#include "dcatkit/dcat/temporal.hpp"

#include <charconv>
#include <regex>

#include "dcatkit/dcat/terms.hpp"
#include "dcatkit/error.hpp"

namespace dcatkit::dcat {

namespace {

[[noreturn]] void bad_duration(std::string_view lexical, const char* why) {
  throw Error(ErrorCode::InvalidDuration, "'" + std::string(lexical) + "': " + why);
}

bool read_digits(std::string_view s, std::size_t& i, std::uint64_t& value) {
  const std::size_t start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == start) return false;
  const auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, value);
  return ec == std::errc() && ptr == s.data() + i;
}

}  // namespace

Duration parse_duration(std::string_view lexical) {
  Duration d;
  std::size_t i = 0;
  if (i < lexical.size() && lexical[i] == '-') {
    d.sign = -1;
    ++i;
  }
  if (i >= lexical.size() || lexical[i] != 'P') bad_duration(lexical, "must start with 'P'");
  ++i;
  bool in_time = false;
  bool any = false;
  bool any_time = false;
  // Designators must appear in this order, each at most once.
  const std::string_view order = "YMDHMS";
  std::size_t next_slot = 0;
  while (i < lexical.size()) {
    if (lexical[i] == 'T') {
      if (in_time) bad_duration(lexical, "repeated 'T'");
      in_time = true;
      next_slot = 3;
      ++i;
      continue;
    }
    std::uint64_t value = 0;
    if (!read_digits(lexical, i, value)) bad_duration(lexical, "expected digits");
    std::string fraction;
    bool has_point = false;
    if (i < lexical.size() && lexical[i] == '.') {
      has_point = true;
      ++i;
      while (i < lexical.size() && lexical[i] >= '0' && lexical[i] <= '9') fraction += lexical[i++];
      if (fraction.empty()) bad_duration(lexical, "expected digits after '.'");
    }
    if (i >= lexical.size()) bad_duration(lexical, "missing designator");
    const char designator = lexical[i++];
    std::size_t slot = std::string_view::npos;
    for (std::size_t k = next_slot; k < order.size(); ++k) {
      if (order[k] == designator && (k >= 3) == in_time) {
        slot = k;
        break;
      }
    }
    if (slot == std::string_view::npos) bad_duration(lexical, "designator out of place");
    if (has_point && slot != 5) bad_duration(lexical, "only seconds may have a fraction");
    next_slot = slot + 1;
    any = true;
    if (in_time) any_time = true;
    switch (slot) {
      case 0: d.years = value; break;
      case 1: d.months = value; break;
      case 2: d.days = value; break;
      case 3: d.hours = value; break;
      case 4: d.minutes = value; break;
      default: d.seconds = DecimalSeconds{value, fraction}; break;
    }
  }
  if (!any) bad_duration(lexical, "no components");
  if (in_time && !any_time) bad_duration(lexical, "'T' without a time component");
  return d;
}

std::string format_duration(const Duration& d) {
  std::string out = d.sign < 0 ? "-P" : "P";
  if (d.years) out += std::to_string(*d.years) + "Y";
  if (d.months) out += std::to_string(*d.months) + "M";
  if (d.days) out += std::to_string(*d.days) + "D";
  if (d.hours || d.minutes || d.seconds) {
    out += "T";
    if (d.hours) out += std::to_string(*d.hours) + "H";
    if (d.minutes) out += std::to_string(*d.minutes) + "M";
    if (d.seconds) {
      out += std::to_string(d.seconds->whole);
      if (!d.seconds->fraction.empty()) out += "." + d.seconds->fraction;
      out += "S";
    }
  }
  if (out.size() <= 2) out += "T0S";
  return out;
}

namespace {

int days_in_month(int year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  return month == 2 && leap ? 29 : kDays[month - 1];
}

}  // namespace

std::array<int, 4> DateValue::lower() const {
  return {year, precision == Precision::year ? 1 : month, precision <= Precision::month ? 1 : day,
          precision == Precision::time ? seconds_of_day : 0};
}

std::array<int, 4> DateValue::upper() const {
  const int m = precision == Precision::year ? 12 : month;
  const int d = precision <= Precision::month ? days_in_month(year, m) : day;
  return {year, m, d, precision == Precision::time ? seconds_of_day : 86399};
}

std::optional<DateValue> parse_date_value(std::string_view lexical) {
  static const std::regex pattern(
      R"((-?\d{4,})(?:-(\d{2})(?:-(\d{2})(?:T(\d{2}):(\d{2}):(\d{2})(?:\.\d+)?)?)?)?(Z|[+-]\d{2}:\d{2})?)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(lexical.begin(), lexical.end(), m, pattern)) return std::nullopt;
  DateValue v;
  v.year = std::stoi(m[1].str());
  v.precision = DateValue::Precision::year;
  if (m[2].matched) {
    v.month = std::stoi(m[2].str());
    if (v.month < 1 || v.month > 12) return std::nullopt;
    v.precision = DateValue::Precision::month;
  }
  if (m[3].matched) {
    v.day = std::stoi(m[3].str());
    if (v.day < 1 || v.day > days_in_month(v.year, v.month)) return std::nullopt;
    v.precision = DateValue::Precision::day;
  }
  if (m[4].matched) {
    const int h = std::stoi(m[4].str());
    const int mi = std::stoi(m[5].str());
    const int s = std::stoi(m[6].str());
    if (h > 24 || mi > 59 || s > 59 || (h == 24 && (mi != 0 || s != 0))) return std::nullopt;
    v.seconds_of_day = h * 3600 + mi * 60 + s;
    v.precision = DateValue::Precision::time;
  }
  return v;
}

bool PeriodOfTime::ordered() const {
  if (!start || !end || !start->parsed || !end->parsed) return true;
  return start->parsed->lower() <= end->parsed->upper();
}

namespace {

std::optional<TemporalBound> dcat_bound(const rdf::Graph& g, const rdf::Term& node, const rdf::Term& predicate) {
  for (const rdf::Term& value : g.objects(node, predicate)) {
    if (value.is_literal()) return TemporalBound{value, predicate, parse_date_value(value.lexical())};
  }
  return std::nullopt;
}

std::optional<TemporalBound> instant_bound(const rdf::Graph& g, const rdf::Term& node, const rdf::Term& predicate) {
  for (const rdf::Term& instant : g.objects(node, predicate)) {
    if (instant.is_literal()) continue;
    for (const rdf::Term* p : {&terms::time::inXSDDate, &terms::time::inXSDDateTime, &terms::time::inXSDDateTimeStamp}) {
      for (const rdf::Term& value : g.objects(instant, *p)) {
        if (value.is_literal()) return TemporalBound{value, predicate, parse_date_value(value.lexical())};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PeriodOfTime parse_period(const rdf::Graph& g, const rdf::Term& node) {
  PeriodOfTime p{node, {}, {}, {}, {}};
  if (node.is_literal()) throw Error(ErrorCode::EmptyPeriod, "temporal value is a literal: " + node.to_string());
  p.start = dcat_bound(g, node, terms::dcat::startDate);
  p.end = dcat_bound(g, node, terms::dcat::endDate);
  auto begin = instant_bound(g, node, terms::time::hasBeginning);
  auto finish = instant_bound(g, node, terms::time::hasEnd);
  if (p.start) {
    p.shadowed_start = std::move(begin);
  } else {
    p.start = std::move(begin);
  }
  if (p.end) {
    p.shadowed_end = std::move(finish);
  } else {
    p.end = std::move(finish);
  }
  if (!p.start && !p.end) throw Error(ErrorCode::EmptyPeriod, "period has neither start nor end: " + node.to_string());
  return p;
}

std::string bound_text(const TemporalBound& b) { return b.value.lexical(); }

}  // namespace dcatkit::dcat

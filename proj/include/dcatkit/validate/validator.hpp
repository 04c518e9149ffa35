#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dcatkit/rdf/graph.hpp"

namespace dcatkit::validate {

enum class Severity { info = 0, warning = 1, error = 2 };

std::string_view to_string(Severity s);
/// "error", "warning" or "info".
std::optional<Severity> severity_from_string(std::string_view s);

struct RuleSpec {
  std::string id;
  Severity severity;
  std::string requirement;  // requirement handle, issue number, or "plumbing"
  std::string description;
};

struct Finding {
  std::string rule;
  Severity severity = Severity::info;
  rdf::Term focus;
  std::optional<rdf::Term> path;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;  // sorted by rule, focus, path, message

  bool conforms() const;
  std::size_t count(Severity s) const;
  std::map<Severity, std::size_t> counts() const;

  std::string to_json(int indent = 2) const;
  std::string to_text() const;
};

struct ValidationOptions {
  /// Rule ids to run; all rules when unset.
  std::optional<std::set<std::string>> rules;
  Severity min_severity = Severity::info;
  /// Check HTTP(S) identifiers over the network through `dereference`.
  bool network_ids = false;
  /// Returns true when the URL dereferences. Required for network checks.
  std::function<bool(const std::string&)> dereference;
};

/// The rule catalog in stable id order.
const std::vector<RuleSpec>& list_rules();
const RuleSpec* find_rule(std::string_view id);

/// Runs the enabled rules over `g`, which should already be closed with
/// dcat::infer_closure. Throws Error(UnknownRuleId) for unknown ids in
/// options.rules.
ValidationReport validate(const rdf::Graph& g, const ValidationOptions& options = {});

}  // namespace dcatkit::validate

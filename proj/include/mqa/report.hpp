#pragma once

// Per-link reports for the command-line front end, with a JSON form that
// round-trips, and the canonical enumeration of reduced links.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mqa/classify.hpp"
#include "mqa/montesinos.hpp"

namespace mqa {

struct ReportOptions {
  bool use_external = false;
  bool oracle = false;  // cross-check the determinant against the diagram
  std::size_t max_crossings = 30;
  bool with_certificate = false;
  bool with_diagram = false;
};

struct Report {
  std::string input;
  std::string reduced;
  Integer epsilon;
  std::size_t p = 0;
  Integer determinant;
  Verdict verdict;
  std::optional<Integer> oracle_determinant;
  std::optional<std::string> certificate;
  std::optional<std::string> diagram;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Throws ParseError for bad input, ConsistencyError when QA and NQA rules
/// collide or the oracle disagrees with the closed-form determinant.
Report make_report(const std::string& input, const ReportOptions& options = {});
Report make_report(const std::string& input, const MontesinosLink& link, const ReportOptions& options = {});

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);
std::string witness_to_text(const Witness& w);

/// Reduced tangles α/β > 1 with α <= max_numerator, in increasing order.
std::vector<Fraction> reduced_tangles(const Integer& max_numerator);

struct EnumerationOptions {
  std::size_t p = 3;
  Integer max_numerator = 5;
  Integer epsilon_min = -4;
  Integer epsilon_max = 1;
  double max_candidates = 5e6;  // refuse when (#tangles)^p is larger
};

/// Default ε window [−p−1, 1], which reaches every classification regime.
EnumerationOptions default_enumeration(std::size_t p, const Integer& max_numerator);

/// Calls `visit` once per equivalence class: reduced links M(ε; t̂_1..t̂_p)
/// whose cycle (1/t̂_i) is its own least dihedral image.
void enumerate_reduced(const EnumerationOptions& options, const std::function<void(const MontesinosLink&)>& visit);

struct EnumerationSummary {
  std::size_t total = 0;
  std::map<Rule, std::size_t> by_rule;
  std::vector<MontesinosLink> undetermined;
  std::size_t collisions = 0;  // links where QA and NQA rules both fired
};

EnumerationSummary summarize(const EnumerationOptions& options, ClassifyOptions classify_options,
                             const std::function<void(const MontesinosLink&, const Verdict&)>& each = {});

}  // namespace mqa

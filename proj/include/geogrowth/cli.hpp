#pragma once

// Command-line front end.  The cmd_* functions hold the logic and return
// plain reports so they can be tested without a process boundary; run_cli
// parses arguments, prints, and maps errors to exit codes.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geogrowth/algebra.hpp"
#include "geogrowth/graph.hpp"
#include "geogrowth/oracle.hpp"

namespace geogrowth::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // bad arguments, unreadable files
  kParse = 2,
  kHypothesis = 3,
  kResource = 4,
  kInternal = 5,
  kDisagreement = 6,  // method=all found methods that disagree
};

enum class Method { automaton, racg, trianglefree, oracle, all };

/// "auto", "racg", "trianglefree", "oracle", "all".
std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& s);

/// Hex FNV-1a of the canonical JSON form of the graph.
std::string input_digest(const NumberedGraph& g);

struct CheckReport {
  LinkRegularity regularity;
  bool all_two = false;
  std::optional<LinkProfile> profile;  // when link-regular and all-2
};

CheckReport cmd_check(const NumberedGraph& g);

/// Throws HypothesisError if either graph is not link-regular.
bool cmd_equiv(const NumberedGraph& a, const NumberedGraph& b);

struct MethodResult {
  std::string method;
  std::optional<RationalFunction> series;
  CountTable coefficients;
  double seconds = 0;
};

struct Skipped {
  std::string method;
  std::string reason;
};

struct CrossCheck {
  std::string first;
  std::string second;
  bool agree = true;
  std::size_t through = 0;  // coefficient tables compared for n <= through
  std::string detail;
};

struct RunReport {
  std::string method;
  std::string input_digest;
  std::vector<MethodResult> results;
  std::vector<Skipped> skipped;
  std::vector<CrossCheck> checks;
  bool agree() const;
};

/// A single method throws when its hypotheses fail.  Method::all runs every
/// applicable method, records the rest as skipped, and compares each result
/// against the first.
RunReport cmd_series(const NumberedGraph& g, Method method, std::size_t n_max, const OracleLimits& limits = {});

/// RACG series straight from a link-size vector.
RunReport cmd_series_ell(const std::vector<long>& ell, std::size_t n_max);

std::string cmd_export_fsa(const NumberedGraph& g, bool include_reject);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geogrowth::cli

#pragma once

#include "alliance/solver.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace alliance {

/// Every check the harness knows, in execution order.
auto all_check_ids() -> const std::vector<std::string> &;

/// Checks cheap enough for a single large graph (no global-kind searches).
auto family_check_ids() -> const std::vector<std::string> &;

struct VerifyOptions
{
  /// Empty selects every check.
  std::set<std::string> checks;
  /// Largest L(Γ) handed to the brute-force oracle.
  int line_oracle_cap = 21;
  /// Largest Γ handed to the brute-force oracle.
  int graph_oracle_cap = default_oracle_cap;
  /// Largest Γ for the characteristic-set check.
  int characteristic_max_n = 6;
  /// Largest Γ for exhaustive all-subset kernel checks.
  int subset_check_max_n = 10;
  unsigned threads = 0;
  Budget budget;
};

struct Violation
{
  std::string graph6;
  std::string check;
  std::string details;
};

struct GraphOutcome
{
  std::string graph6;
  int order = 0;
  int size = 0;
  /// Alliance numbers of Γ and L(Γ) by kind name; "line:" prefix for L(Γ).
  std::map<std::string, int> values;
  std::vector<std::string> checks_run;
  int violations = 0;
};

/// Graph on which a lower bound coincides with the true value.
struct TightExample
{
  std::string bound;
  std::string graph6;
  int value;
};

struct VerificationRun
{
  std::string corpus;
  std::vector<std::string> checks;
  std::vector<GraphOutcome> outcomes;
  std::vector<Violation> violations;
  std::map<std::string, int> executed;
  std::vector<TightExample> tight_examples;
  std::vector<std::string> notes;

  auto ok() const -> bool { return violations.empty(); }
};

/// Runs the selected checks on every graph. Outcomes and violations are
/// ordered by graph6 string regardless of thread scheduling.
auto verify_graphs(const std::vector<Graph> & graphs, const std::string & corpus, const VerifyOptions & options)
    -> VerificationRun;

struct StarErratumRow
{
  int leaves;
  int remark_value;
  int oracle_value;
  int strong_oracle_value;
  int closed_form;
  int strong_closed_form;
  bool remark_agrees;
};

/// a(L(K_{1,n})) by oracle against both the n−1 remark and ⌈n/2⌉.
auto star_erratum(std::span<const int> leaves) -> std::vector<StarErratumRow>;

} // namespace alliance

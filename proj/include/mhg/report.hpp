#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mhg/alpha.hpp"

namespace mhg {

struct CheckRow {
  std::string name;
  std::string status;  // "pass" | "fail" | "evidence"
  std::map<std::string, double> numbers;
  std::string detail;
  bool failed() const { return status == "fail"; }
};

/// Grid and output settings for a verification suite. Every run is
/// reproducible from the config plus the seed; the config is echoed into
/// every report.
struct SuiteConfig {
  std::string suite;  // exact-identities | conjectures | mc-integrals | ortho | operators
  std::vector<AlphaParam> alphas;
  std::vector<int> ns;
  int max_degree = 6;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  std::string out_path;   // empty: stdout only
  std::string format = "json";  // json | csv
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckRow> rows;
  bool all_asserted_pass() const;
};

/// Runs the named suite; throws UsageError for an unknown suite or an
/// invalid grid.
SuiteReport run_suite(const SuiteConfig& cfg);

/// Serialize: the timestamp lives in an isolated header object so that
/// re-running an identical config produces byte-identical config+results.
std::string report_json(const SuiteReport& rep);
std::string report_csv(const SuiteReport& rep);
void write_report(const SuiteReport& rep);

/// Deterministic JSON/CSV coefficient tables (stringified rationals).
/// kinds: jack-coeffs | binomials | jacobi-c | laguerre | hermite
std::string emit_table(const std::string& kind, const AlphaParam& alpha, int max_weight, int n,
                       const std::string& format);

// Individual suite builders (also used by the acceptance harness).
std::vector<CheckRow> suite_exact_identities(const SuiteConfig& cfg);
std::vector<CheckRow> suite_operators(const SuiteConfig& cfg);
std::vector<CheckRow> suite_ortho(const SuiteConfig& cfg);
std::vector<CheckRow> suite_mc_integrals(const SuiteConfig& cfg);
std::vector<CheckRow> suite_conjectures(const SuiteConfig& cfg);

/// Summaries reused by the acceptance harness.
std::pair<bool, std::string> gauss_trend_summary();
std::pair<bool, std::string> jacobi_structure_summary(const std::vector<AlphaParam>& alphas);

/// Unified identity-check dispatch for the CLI:
/// names: euler | kummer | gauss | saalschutz | duality | kernel_deriv |
///        shifted_1F0 | laguerre_gen.
/// Rational parameters arrive as strings (a, b, c, N); alpha, D, n as given.
CheckRow identity_check(const std::string& name,
                        const std::map<std::string, std::string>& params,
                        const AlphaParam& alpha, int D, int n);

}  // namespace mhg

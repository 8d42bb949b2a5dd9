#ifndef FLOWBCH_VERIFY_HPP
#define FLOWBCH_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace flowbch {

struct VerifyConfig {
  std::uint64_t seed = 42;
  double tolerance = 1e-9;  ///< oracle-agreement tolerance
  int trials = 1000;
  bool parallel = true;
};

struct CheckResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

SuiteReport verify_brackets(const VerifyConfig& cfg);
SuiteReport verify_flows(const VerifyConfig& cfg);
SuiteReport verify_bch(const VerifyConfig& cfg);
SuiteReport verify_representations(const VerifyConfig& cfg);

/// Runs the named suite ("brackets", "flows", "bch", "representations",
/// "all") and returns the reports in a fixed order.
std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyConfig& cfg);

/// Deterministic text rendering (byte-identical for equal config).
std::string render_reports(const std::vector<SuiteReport>& reports);

/// Uniform deviate in [lo, hi] from a counter-based generator; trial-indexed
/// streams keep parallel verification runs reproducible.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);

 private:
  std::uint64_t state_;
  std::uint64_t next();
};

}  // namespace flowbch

#endif

#pragma once

#include <string>
#include <vector>

#include "irvs/metrics.hpp"
#include "irvs/scenario.hpp"

namespace irvs {

/// One experiment: a config plus the schemes to evaluate on every drop.
struct ExperimentSpec {
  SystemConfig config;
  std::vector<SchemeSpec> schemes;
  std::string output_dir = "results";
  bool emit_cdf = false;
  int workers = 1;
};

struct ExperimentResult {
  std::vector<DropResult> drops;       // drop-major, scheme order within drop
  std::vector<CdfSummary> summaries;   // one per scheme, in scheme order
};

/// The six-scheme comparison set: TDMA, NOMA, RPS, DPS-1bit, DPS-2bit, CPS.
std::vector<SchemeSpec> default_schemes();

/// Parses one scheme token: tdma | noma | rps | rpsd[<bits>] | dps[<bits>] |
/// cps. A bare dps/rpsd uses default_bits. Throws on unknown tokens.
SchemeSpec parse_scheme(const std::string& token, int default_bits);
std::vector<SchemeSpec> parse_scheme_list(const std::string& csv, int default_bits);

/// Runs every requested scheme on every drop. All schemes of a drop share
/// one channel realization (paired comparison); random-phase schemes draw
/// from per-(drop, scheme, user) sub-streams, so results are identical for
/// any worker count or evaluation order. Throws on invalid specs and on any
/// non-finite rate (reporting drop and scheme).
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Writes drops.csv and summary.csv (plus cdf_<scheme>.csv when emit_cdf)
/// under output_dir, creating it if needed. Throws with the offending path
/// on I/O failure.
void write_results(const std::vector<DropResult>& results,
                   const std::vector<CdfSummary>& summaries,
                   const std::string& output_dir, bool emit_cdf);

}  // namespace irvs

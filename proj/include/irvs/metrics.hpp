#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <armadillo>

#include "irvs/beamforming.hpp"

namespace irvs {

enum class SchemeKind { kTdma, kNoma, kRps, kRpsDiscrete, kDps, kCps };

/// A scheme tag; bits is meaningful for the discrete kinds only.
struct SchemeSpec {
  SchemeKind kind = SchemeKind::kCps;
  int bits = 0;

  std::string label() const;  // "TDMA", "RPS", "DPS-1bit", ...
  bool operator==(const SchemeSpec&) const = default;
};

/// Per-drop outcome of one scheme. sum_rate is the sum of per_user_rates.
struct DropResult {
  int drop_index = 0;
  SchemeSpec scheme;
  std::vector<double> per_user_rates;  // bps/Hz
  double sum_rate = 0.0;               // bps/Hz
};

/// Percentile statistics of one scheme's sum-rate samples.
/// p5 is the 95%-likely (5th percentile) value, p50 the median.
struct CdfSummary {
  SchemeSpec scheme;
  std::size_t samples = 0;
  double p5 = 0.0;
  double p50 = 0.0;
};

/// Thermal noise power kappa * B_w * T_0 * 10^(N_f/10) in watts.
double noise_power(double bandwidth_hz, double temperature_k,
                   double noise_figure_db);

/// Spectral efficiency (1/K) log2(1 + |effective * w|^2 P_d / noise_var).
/// With w the MRT of effective this equals the ||effective||^2 closed form.
double user_rate(const arma::cx_rowvec& effective, const Beamformer& w,
                 double p_d, double noise_var, int k_users);

/// Sum of per-user rates (each already carries its slot-share factor).
double sum_rate(const std::vector<double>& per_user_rates);

/// Nearest-rank percentile: sort ascending, take element ceil(q*N) (1-based).
/// q must lie in (0,1); throws std::invalid_argument on empty input.
double percentile(std::vector<double> samples, double q);

}  // namespace irvs

#include "irvs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace irvs {

namespace {
constexpr double kBoltzmann = 1.380649e-23;  // J/K
}

std::string SchemeSpec::label() const {
  switch (kind) {
    case SchemeKind::kTdma: return "TDMA";
    case SchemeKind::kNoma: return "NOMA";
    case SchemeKind::kRps: return "RPS";
    case SchemeKind::kRpsDiscrete: return "RPSD-" + std::to_string(bits) + "bit";
    case SchemeKind::kDps: return "DPS-" + std::to_string(bits) + "bit";
    case SchemeKind::kCps: return "CPS";
  }
  return "?";
}

double noise_power(double bandwidth_hz, double temperature_k, double noise_figure_db) {
  return kBoltzmann * bandwidth_hz * temperature_k *
         std::pow(10.0, noise_figure_db / 10.0);
}

double user_rate(const arma::cx_rowvec& effective, const Beamformer& w,
                 double p_d, double noise_var, int k_users) {
  const double snr = std::norm(arma::as_scalar(effective * w.w)) * p_d / noise_var;
  return std::log2(1.0 + snr) / k_users;
}

double sum_rate(const std::vector<double>& per_user_rates) {
  return std::accumulate(per_user_rates.begin(), per_user_rates.end(), 0.0);
}

double percentile(std::vector<double> samples, double q) {
  if (samples.empty()) throw std::invalid_argument("percentile: no samples");
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("percentile: q outside (0,1)");
  std::sort(samples.begin(), samples.end());
  const auto n = samples.size();
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
  rank = std::clamp<std::size_t>(rank, 1, n);
  return samples[rank - 1];
}

}  // namespace irvs

#include "irvs/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "irvs/beamforming.hpp"
#include "irvs/metrics.hpp"

namespace irvs {

NomaAllocation noma_allocation(const std::vector<arma::cx_vec>& direct) {
  const int k_users = static_cast<int>(direct.size());
  if (k_users < 1) throw std::invalid_argument("noma_allocation: no users");
  std::vector<double> gains(k_users);
  for (int k = 0; k < k_users; ++k) gains[k] = std::pow(arma::norm(direct[k], 2), 2);

  NomaAllocation alloc;
  alloc.order.resize(k_users);
  std::iota(alloc.order.begin(), alloc.order.end(), 0);
  // ascending gain; stable sort keeps lower index first on ties
  std::stable_sort(alloc.order.begin(), alloc.order.end(),
                   [&](int a, int b) { return gains[a] < gains[b]; });

  // fractions 2k/(K(K+1)) handed out largest-first, so the weakest user
  // gets the biggest share
  alloc.coefficients.resize(k_users);
  const double denom = static_cast<double>(k_users) * (k_users + 1);
  for (int pos = 0; pos < k_users; ++pos)
    alloc.coefficients[pos] = 2.0 * (k_users - pos) / denom;
  return alloc;
}

std::vector<double> tdma_rate_no_irs(const std::vector<arma::cx_vec>& direct,
                                     double p_d, double noise_var) {
  const int k_users = static_cast<int>(direct.size());
  std::vector<double> rates(k_users);
  for (int k = 0; k < k_users; ++k) {
    const double gain = std::pow(arma::norm(direct[k], 2), 2);
    rates[k] = std::log2(1.0 + gain * p_d / noise_var) / k_users;
  }
  return rates;
}

std::vector<double> noma_rates(const std::vector<arma::cx_vec>& direct,
                               double p_d, double noise_var) {
  const int k_users = static_cast<int>(direct.size());
  const NomaAllocation alloc = noma_allocation(direct);
  std::vector<double> rates(k_users);
  for (int pos = 0; pos < k_users; ++pos) {
    const int u = alloc.order[pos];
    const double gain = std::pow(arma::norm(direct[u], 2), 2);
    double residual = 0.0;  // power share of users decoded after this one
    for (int later = pos + 1; later < k_users; ++later)
      residual += alloc.coefficients[later];
    const double sinr =
        alloc.coefficients[pos] * p_d * gain / (residual * p_d * gain + noise_var);
    rates[u] = std::log2(1.0 + sinr);
  }
  return rates;
}

double rps_rate(const arma::cx_vec& g, const arma::cx_mat& h,
                const arma::cx_vec& f, const std::optional<DiscretePhaseSet>& set,
                double p_d, double noise_var, int k_users, Rng& rng) {
  const PhaseVector phases = random_phases(g.n_elem, set, rng);
  const arma::cx_rowvec eff = effective_channel(g, phases, h, f);
  const Beamformer w = mrt(eff);
  return user_rate(eff, w, p_d, noise_var, k_users);
}

}  // namespace irvs

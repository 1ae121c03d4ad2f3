#pragma once

#include <optional>
#include <vector>

#include <armadillo>

#include "irvs/reflection.hpp"
#include "irvs/rng.hpp"

namespace irvs {

/// Superposition-coding power split. order lists user indices from weakest
/// to strongest direct-channel gain (ties broken by index); coefficients[i]
/// is the fraction for order[i], descending, summing to 1. With K users the
/// fractions are 2k/(K(K+1)) for k = K..1, so the weakest user gets the
/// largest share.
struct NomaAllocation {
  std::vector<int> order;
  std::vector<double> coefficients;
};

NomaAllocation noma_allocation(const std::vector<arma::cx_vec>& direct);

/// Orthogonal-slot baseline without surfaces: user k gets
/// (1/K) log2(1 + ||f_k||^2 P_d / noise_var).
std::vector<double> tdma_rate_no_irs(const std::vector<arma::cx_vec>& direct,
                                     double p_d, double noise_var);

/// Superposition + SIC baseline without surfaces. Users are decoded weakest
/// to strongest; the user at sorted position i cancels positions < i and
/// treats the rest as interference:
///   R_(i) = log2(1 + a_(i) P g_(i) / (P g_(i) sum_{j>i} a_(j) + noise_var))
/// with g = ||f||^2 the post-MRT channel gain. All users transmit over the
/// whole frame, so there is no 1/K factor. Returned in original user order.
std::vector<double> noma_rates(const std::vector<arma::cx_vec>& direct,
                               double p_d, double noise_var);

/// Random-phase-shift scheme: draws one phase vector (continuous, or uniform
/// over the discrete set), applies MRT to the resulting effective channel and
/// returns (1/K) log2(1 + ||effective||^2 P_d / noise_var).
double rps_rate(const arma::cx_vec& g, const arma::cx_mat& h,
                const arma::cx_vec& f, const std::optional<DiscretePhaseSet>& set,
                double p_d, double noise_var, int k_users, Rng& rng);

}  // namespace irvs

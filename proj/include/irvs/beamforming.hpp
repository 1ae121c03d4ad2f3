#pragma once

#include <optional>
#include <vector>

#include <armadillo>

#include "irvs/reflection.hpp"

namespace irvs {

/// Transmit vector with ||w|| <= 1 (exactly 1 for MRT outputs).
struct Beamformer {
  arma::cx_vec w;
};

struct AoOptions {
  int iterations = 3;  // fixed iteration count (the production default)
  // When set, iterate until the relative objective change drops below the
  // threshold, capped at max_iterations. Off by default for determinism of
  // the iteration count.
  std::optional<double> rel_tolerance;
  int max_iterations = 50;
};

/// Outcome of the alternating optimization for one (user, slot).
/// objective_trace[i] is |effective * w|^2 after full iteration i+1 and is
/// non-decreasing: the phase step is globally optimal given w, and the MRT
/// step is globally optimal given the phases.
struct AoResult {
  PhaseVector phases;
  Beamformer w;
  std::vector<double> objective_trace;
};

/// Composite row channel g^T Phi H + f^T seen by one user.
arma::cx_rowvec effective_channel(const arma::cx_vec& g, const PhaseVector& phases,
                                  const arma::cx_mat& h, const arma::cx_vec& f);

/// Closed-form phase alignment for a fixed transmit vector: with
/// chi = diag(g^T) H w and phi0 = arg(f^T w), every reflected term
/// g_n e^{j phi_n} (h_n^T w) is rotated onto phase phi0, so the combined
/// amplitude attains |f^T w| + sum_n |g_n| |h_n^T w| (triangle equality).
/// phi0 is defined as 0 when f^T w = 0; zero chi entries get phase phi0.
PhaseVector optimal_phases_given_w(const arma::cx_vec& g, const arma::cx_mat& h,
                                   const arma::cx_vec& f, const Beamformer& w);

/// Maximal-ratio transmission: w = effective^H / ||effective||. An all-zero
/// effective channel degenerates to the first basis vector.
Beamformer mrt(const arma::cx_rowvec& effective);

/// Alternates optimal_phases_given_w and mrt starting from the direct-channel
/// MRT w0 = f^* / ||f|| (first basis vector when f = 0).
AoResult alternating_optimize(const arma::cx_vec& g, const arma::cx_mat& h,
                              const arma::cx_vec& f, const AoOptions& opts = {});
AoResult alternating_optimize(const arma::cx_vec& g, const arma::cx_mat& h,
                              const arma::cx_vec& f, int iterations);

}  // namespace irvs

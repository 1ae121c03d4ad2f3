#pragma once

#include <iosfwd>
#include <vector>

#include <armadillo>

#include "irvs/rng.hpp"
#include "irvs/scenario.hpp"

namespace irvs {

/// Per-drop linear power gains of every link.
struct LargeScaleGains {
  arma::vec bs_ue_var;    // sigma_k^2, one per user
  arma::mat surf_ue_var;  // sigma_sk^2, surface x user
  arma::vec bs_surf_var;  // sigma_s^2, one per surface
};

/// One small-scale realization. stacked_h is the row-block concatenation of
/// bs_surf in surface order; stacked_g[k] concatenates surf_ue[s][k] the same
/// way, so stacked entries always agree with their per-surface blocks.
struct ChannelRealization {
  std::vector<arma::cx_vec> direct;                // f_k, length N_b
  std::vector<std::vector<arma::cx_vec>> surf_ue;  // g_sk, [s][k], length N_s
  std::vector<arma::cx_mat> bs_surf;               // H_s, N_s x N_b
  arma::cx_mat stacked_h;                          // H, N_r x N_b
  std::vector<arma::cx_vec> stacked_g;             // g_k, length N_r
};

/// COST-Hata constant L in dB; fc in MHz, heights in meters. The transmitter
/// height is 5 m for BS-UE links and 3 m for surface-UE links.
double cost_hata_constant(double fc_mhz, double tx_height_m, double rx_height_m);

/// Three-slope log-distance path loss in dB (negative). Distances in km;
/// clamps to the d0 value inside the near-field break point.
double three_slope_pathloss_db(double d_km, double l_db, double d0_km,
                               double d1_km);

/// Linear gain 10^((P + S)/10) with a fresh shadowing draw
/// S ~ N(0, sigma_sd^2) dB.
double shadowed_gain(double pathloss_db, double sigma_sd_db, Rng& rng);

/// Reference power law 10^(L0/10) * d^-alpha, d in meters, clamped to the
/// 1 m reference distance.
double los_pathloss_linear(double d_m, double l0_db, double alpha);

/// n i.i.d. CN(0, variance) entries.
arma::cx_vec rayleigh_vector(arma::uword n, double variance, Rng& rng);

/// Rician fading matrix
///   sqrt(G v / (G+1)) * H_los + sqrt(v / (G+1)) * H_nlos
/// with H_nlos i.i.d. CN(0,1) and H_los the all-ones matrix (the broadside
/// rank-one outer product; swap here for steering-vector variants).
arma::cx_mat rician_matrix(arma::uword n_rows, arma::uword n_cols,
                           double variance, double rician_factor, Rng& rng);

/// Draws the per-link large-scale gains for one drop: COST-Hata three-slope
/// plus lognormal shadowing on BS-UE and surface-UE links; the BS-surface
/// gain follows config.bs_surf_gain_model (no shadowing either way).
LargeScaleGains sample_large_scale(const SystemConfig& config,
                                   const DropGeometry& geometry, Rng& rng);

/// Full per-drop realization: Rayleigh BS-UE and surface-UE links, Rician
/// BS-surface links, stacked forms included. Draw order is fixed (users,
/// then surface-user pairs, then surfaces) so a given rng stream always
/// yields the same realization.
ChannelRealization realize_channels(const SystemConfig& config,
                                    const DropGeometry& geometry, Rng& rng);

/// Debug dump, one matrix block per section, entries as "re,im" row-major.
void dump_realization(const ChannelRealization& ch, std::ostream& os);

}  // namespace irvs

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irvs/rng.hpp"

namespace irvs {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Euclidean distance in the horizontal plane, in meters. Antenna heights
/// enter the path-loss constant only, never the distance.
double planar_distance(const Point2& a, const Point2& b);

/// Large-scale model for the BS-surface link. kUnit treats the Rician
/// channel entries as unit-variance (no distance-dependent factor); kPowerLaw
/// applies the reference-loss power law los_pathloss_linear().
enum class BsSurfGainModel { kUnit, kPowerLaw };

/// All scalar parameters of a simulation campaign. Defaults are the urban
/// macro setup used throughout: 16-antenna BS centered in a 1 km x 1 km
/// square, 20 W over 20 MHz at 1.9 GHz.
struct SystemConfig {
  int n_bs_antennas = 16;                         // N_b
  int n_users = 2;                                // K
  int n_surfaces = 2;                             // S
  std::vector<int> elements_per_surface = {200, 200};
  double tx_power_watts = 20.0;                   // P_d
  double bandwidth_hz = 20.0e6;                   // B_w
  double carrier_freq_mhz = 1900.0;               // f_c, MHz convention
  double bs_height_m = 5.0;
  double surface_height_m = 3.0;
  double ue_height_m = 1.65;
  double area_m = 1000.0;                         // square side
  Point2 bs_position{500.0, 500.0};
  double breakpoint_d0_km = 0.01;
  double breakpoint_d1_km = 0.05;
  double shadow_sigma_db = 8.0;
  double rician_factor = 5.0;
  double los_ref_loss_db = -30.0;                 // L_0 at 1 m
  double los_exponent = 2.5;
  double noise_figure_db = 9.0;
  double temperature_k = 290.0;
  int quantizer_bits = 1;
  int ao_iterations = 3;
  int n_drops = 1000;
  std::uint64_t master_seed = 1;
  BsSurfGainModel bs_surf_gain_model = BsSurfGainModel::kUnit;

  /// N_r, the element count summed over all surfaces.
  int total_elements() const;

  /// Expands a single-entry elements_per_surface to all n_surfaces entries.
  void resolve_elements();

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

/// Loads a flat key/value config file (keys are exactly the field names,
/// `#` starts a comment, lists are comma-separated). Unknown keys throw.
SystemConfig load_config(const std::string& path);

/// Planar positions of one Monte Carlo drop. All points lie inside
/// [0, area_m] x [0, area_m].
struct DropGeometry {
  Point2 bs;
  std::vector<Point2> users;
  std::vector<Point2> surfaces;
};

/// Draws user and surface positions uniformly over the square. Pure function
/// of (master_seed, drop_index): re-running any drop reproduces it exactly.
DropGeometry sample_geometry(const SystemConfig& config, int drop_index);

}  // namespace irvs

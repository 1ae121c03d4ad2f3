#include "irvs/channel.hpp"

#include <cmath>
#include <ostream>

namespace irvs {

double cost_hata_constant(double fc_mhz, double tx_height_m, double rx_height_m) {
  const double lf = std::log10(fc_mhz);
  return 46.3 + 33.9 * lf - 13.82 * std::log10(tx_height_m) -
         (1.1 * lf - 0.7) * rx_height_m + 1.56 * lf - 0.8;
}

double three_slope_pathloss_db(double d_km, double l_db, double d0_km, double d1_km) {
  if (d_km > d1_km) return -l_db - 35.0 * std::log10(d_km);
  if (d_km > d0_km)
    return -l_db - 15.0 * std::log10(d1_km) - 20.0 * std::log10(d_km);
  return -l_db - 15.0 * std::log10(d1_km) - 20.0 * std::log10(d0_km);
}

double shadowed_gain(double pathloss_db, double sigma_sd_db, Rng& rng) {
  const double shadow_db = sigma_sd_db * rng.gaussian();
  return std::pow(10.0, (pathloss_db + shadow_db) / 10.0);
}

double los_pathloss_linear(double d_m, double l0_db, double alpha) {
  const double d = std::max(d_m, 1.0);  // inside the 1 m reference distance
  return std::pow(10.0, l0_db / 10.0) * std::pow(d, -alpha);
}

arma::cx_vec rayleigh_vector(arma::uword n, double variance, Rng& rng) {
  if (variance <= 0.0) throw std::invalid_argument("rayleigh_vector: variance must be > 0");
  arma::cx_vec v(n, arma::fill::none);
  for (arma::uword i = 0; i < n; ++i) v(i) = rng.complex_gaussian(variance);
  return v;
}

arma::cx_mat rician_matrix(arma::uword n_rows, arma::uword n_cols, double variance,
                           double rician_factor, Rng& rng) {
  const double los_amp = std::sqrt(rician_factor * variance / (rician_factor + 1.0));
  const double nlos_amp = std::sqrt(variance / (rician_factor + 1.0));
  arma::cx_mat m(n_rows, n_cols, arma::fill::none);
  // column-major fill; the draw order is part of the reproducibility contract
  for (arma::uword j = 0; j < n_cols; ++j)
    for (arma::uword i = 0; i < n_rows; ++i)
      m(i, j) = los_amp + nlos_amp * rng.complex_gaussian(1.0);
  return m;
}

LargeScaleGains sample_large_scale(const SystemConfig& config,
                                   const DropGeometry& geometry, Rng& rng) {
  const int k_users = config.n_users;
  const int s_surfaces = config.n_surfaces;
  const double l_bs = cost_hata_constant(config.carrier_freq_mhz, config.bs_height_m,
                                         config.ue_height_m);
  const double l_surf = cost_hata_constant(config.carrier_freq_mhz,
                                           config.surface_height_m, config.ue_height_m);
  LargeScaleGains g;
  g.bs_ue_var.set_size(k_users);
  for (int k = 0; k < k_users; ++k) {
    const double d_km = planar_distance(geometry.bs, geometry.users[k]) / 1000.0;
    const double pl = three_slope_pathloss_db(d_km, l_bs, config.breakpoint_d0_km,
                                              config.breakpoint_d1_km);
    g.bs_ue_var(k) = shadowed_gain(pl, config.shadow_sigma_db, rng);
  }
  g.surf_ue_var.set_size(s_surfaces, k_users);
  for (int s = 0; s < s_surfaces; ++s) {
    for (int k = 0; k < k_users; ++k) {
      const double d_km = planar_distance(geometry.surfaces[s], geometry.users[k]) / 1000.0;
      const double pl = three_slope_pathloss_db(d_km, l_surf, config.breakpoint_d0_km,
                                                config.breakpoint_d1_km);
      g.surf_ue_var(s, k) = shadowed_gain(pl, config.shadow_sigma_db, rng);
    }
  }
  g.bs_surf_var.set_size(s_surfaces);
  for (int s = 0; s < s_surfaces; ++s) {
    if (config.bs_surf_gain_model == BsSurfGainModel::kUnit) {
      g.bs_surf_var(s) = 1.0;
    } else {
      const double d_m = planar_distance(geometry.bs, geometry.surfaces[s]);
      g.bs_surf_var(s) = los_pathloss_linear(d_m, config.los_ref_loss_db,
                                             config.los_exponent);
    }
  }
  return g;
}

ChannelRealization realize_channels(const SystemConfig& config,
                                    const DropGeometry& geometry, Rng& rng) {
  const int k_users = config.n_users;
  const int s_surfaces = config.n_surfaces;
  const LargeScaleGains gains = sample_large_scale(config, geometry, rng);

  ChannelRealization ch;
  ch.direct.reserve(k_users);
  for (int k = 0; k < k_users; ++k)
    ch.direct.push_back(rayleigh_vector(config.n_bs_antennas, gains.bs_ue_var(k), rng));

  ch.surf_ue.resize(s_surfaces);
  for (int s = 0; s < s_surfaces; ++s) {
    ch.surf_ue[s].reserve(k_users);
    for (int k = 0; k < k_users; ++k)
      ch.surf_ue[s].push_back(
          rayleigh_vector(config.elements_per_surface[s], gains.surf_ue_var(s, k), rng));
  }

  ch.bs_surf.reserve(s_surfaces);
  for (int s = 0; s < s_surfaces; ++s)
    ch.bs_surf.push_back(rician_matrix(config.elements_per_surface[s],
                                       config.n_bs_antennas, gains.bs_surf_var(s),
                                       config.rician_factor, rng));

  const arma::uword n_r = static_cast<arma::uword>(config.total_elements());
  ch.stacked_h.set_size(n_r, config.n_bs_antennas);
  arma::uword row = 0;
  for (int s = 0; s < s_surfaces; ++s) {
    const arma::uword ns = ch.bs_surf[s].n_rows;
    if (ns > 0) ch.stacked_h.rows(row, row + ns - 1) = ch.bs_surf[s];
    row += ns;
  }
  ch.stacked_g.reserve(k_users);
  for (int k = 0; k < k_users; ++k) {
    arma::cx_vec gk(n_r, arma::fill::none);
    arma::uword at = 0;
    for (int s = 0; s < s_surfaces; ++s) {
      const arma::uword ns = ch.surf_ue[s][k].n_elem;
      if (ns > 0) gk.subvec(at, at + ns - 1) = ch.surf_ue[s][k];
      at += ns;
    }
    ch.stacked_g.push_back(std::move(gk));
  }
  return ch;
}

namespace {

void dump_block(std::ostream& os, const std::string& name, const arma::cx_mat& m) {
  os << "# " << name << " rows=" << m.n_rows << " cols=" << m.n_cols << "\n";
  for (arma::uword i = 0; i < m.n_rows; ++i) {
    for (arma::uword j = 0; j < m.n_cols; ++j) {
      if (j) os << ' ';
      const auto v = m(i, j);
      os << v.real() << ',' << v.imag();
    }
    os << '\n';
  }
}

}  // namespace

void dump_realization(const ChannelRealization& ch, std::ostream& os) {
  os.precision(17);
  for (std::size_t k = 0; k < ch.direct.size(); ++k)
    dump_block(os, "direct user=" + std::to_string(k),
               arma::cx_mat(ch.direct[k]).st());
  for (std::size_t s = 0; s < ch.surf_ue.size(); ++s)
    for (std::size_t k = 0; k < ch.surf_ue[s].size(); ++k)
      dump_block(os, "surf_ue surface=" + std::to_string(s) + " user=" + std::to_string(k),
                 arma::cx_mat(ch.surf_ue[s][k]).st());
  for (std::size_t s = 0; s < ch.bs_surf.size(); ++s)
    dump_block(os, "bs_surf surface=" + std::to_string(s), ch.bs_surf[s]);
}

}  // namespace irvs

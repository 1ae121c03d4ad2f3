#include <doctest.h>

#include <cmath>
#include <complex>

#include "irvs/channel.hpp"

using namespace irvs;

TEST_CASE("cost_hata_constant reference values") {
  // hand evaluation of the constant at 1900 MHz
  CHECK(cost_hata_constant(1900.0, 5.0, 1.65) == doctest::Approx(147.31).epsilon(0.0001));
  const double l5 = cost_hata_constant(1900.0, 5.0, 1.65);
  const double l3 = cost_hata_constant(1900.0, 3.0, 1.65);
  CHECK(l3 - l5 == doctest::Approx(13.82 * std::log10(5.0 / 3.0)).epsilon(1e-9));

  // linear in log10(fc): doubling fc adds (33.9 + 1.56 - 1.1*h_T)*log10(2)
  const double h_t = 1.65;
  const double expect = (33.9 + 1.56 - 1.1 * h_t) * std::log10(2.0);
  CHECK(cost_hata_constant(3800.0, 5.0, h_t) - l5 == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("three_slope_pathloss_db branches and continuity") {
  const double l = 147.31, d0 = 0.01, d1 = 0.05;
  CHECK(three_slope_pathloss_db(1.0, l, d0, d1) == doctest::Approx(-147.31));
  // inside the near-field break point the loss is clamped:
  // -147.31 - 15*log10(0.05) - 20*log10(0.01) = -87.79455
  CHECK(three_slope_pathloss_db(0.005, l, d0, d1) ==
        doctest::Approx(-87.79455).epsilon(0.0001));
  CHECK(three_slope_pathloss_db(0.0, l, d0, d1) ==
        three_slope_pathloss_db(0.01, l, d0, d1));

  // continuity at both break points
  const double eps = 1e-12;
  CHECK(std::abs(three_slope_pathloss_db(d1, l, d0, d1) -
                 three_slope_pathloss_db(d1 + eps, l, d0, d1)) < 1e-9);
  CHECK(std::abs(three_slope_pathloss_db(d0, l, d0, d1) -
                 three_slope_pathloss_db(d0 + eps, l, d0, d1)) < 1e-9);
}

TEST_CASE("shadowed_gain statistics") {
  Rng rng(101);
  SUBCASE("no shadowing is exact") {
    CHECK(shadowed_gain(-100.0, 0.0, rng) == doctest::Approx(1e-10).epsilon(1e-12));
  }
  SUBCASE("shadow draws have the configured spread") {
    const int n = 100000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double g = shadowed_gain(0.0, 8.0, rng);
      const double s_db = 10.0 * std::log10(g);
      sum += s_db;
      sum2 += s_db * s_db;
    }
    const double mean = sum / n;
    const double sd = std::sqrt(sum2 / n - mean * mean);
    CHECK(std::abs(mean) < 3.0 * 8.0 / std::sqrt(static_cast<double>(n)));
    CHECK(sd == doctest::Approx(8.0).epsilon(0.05));
  }
}

TEST_CASE("los_pathloss_linear power law") {
  CHECK(los_pathloss_linear(1.0, -30.0, 2.5) == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(los_pathloss_linear(100.0, -30.0, 2.5) == doctest::Approx(1e-8).epsilon(1e-12));
  // inside the reference distance the gain clamps to the 1 m value
  CHECK(los_pathloss_linear(0.3, -30.0, 2.5) == los_pathloss_linear(1.0, -30.0, 2.5));
  const double g1 = los_pathloss_linear(200.0, -30.0, 2.5);
  const double g2 = los_pathloss_linear(400.0, -30.0, 2.5);
  CHECK(g2 / g1 == doctest::Approx(std::pow(2.0, -2.5)).epsilon(1e-12));
}

TEST_CASE("rayleigh_vector moments") {
  Rng rng(55);
  const arma::uword n = 100000;
  const double variance = 0.37;
  const arma::cx_vec v = rayleigh_vector(n, variance, rng);
  const double second_moment = arma::accu(arma::square(arma::abs(v))) / n;
  CHECK(second_moment == doctest::Approx(variance).epsilon(0.03));
  const arma::cx_double mean = arma::accu(v) / static_cast<double>(n);
  const double tol = 3.0 * std::sqrt(variance / n);
  CHECK(std::abs(mean.real()) < tol);
  CHECK(std::abs(mean.imag()) < tol);
}

TEST_CASE("rician_matrix limits and moments") {
  SUBCASE("zero factor is pure scattering") {
    Rng rng(7);
    const arma::cx_mat m = rician_matrix(400, 250, 0.9, 0.0, rng);
    const double second = arma::accu(arma::square(arma::abs(m))) / m.n_elem;
    CHECK(second == doctest::Approx(0.9).epsilon(0.03));
  }
  SUBCASE("huge factor collapses onto the deterministic component") {
    Rng rng(8);
    const arma::cx_mat m = rician_matrix(20, 10, 4.0, 1e9, rng);
    for (const auto& v : m) CHECK(std::abs(v - arma::cx_double(2.0, 0.0)) < 2e-3 * 2.0);
  }
  SUBCASE("unit LOS entries keep the total second moment") {
    Rng rng(9);
    const arma::cx_mat m = rician_matrix(500, 200, 1.3, 5.0, rng);
    const double second = arma::accu(arma::square(arma::abs(m))) / m.n_elem;
    CHECK(second == doctest::Approx(1.3).epsilon(0.03));
  }
}

namespace {

SystemConfig small_config() {
  SystemConfig cfg;
  cfg.n_bs_antennas = 4;
  cfg.n_users = 2;
  cfg.n_surfaces = 2;
  cfg.elements_per_surface = {5, 3};
  return cfg;
}

}  // namespace

TEST_CASE("realize_channels stacking agrees with per-surface blocks") {
  const SystemConfig cfg = small_config();
  const DropGeometry geo = sample_geometry(cfg, 0);
  Rng rng(derive_seed(cfg.master_seed, 0, kChannelStream));
  const ChannelRealization ch = realize_channels(cfg, geo, rng);

  REQUIRE(ch.stacked_h.n_rows == 8);
  REQUIRE(ch.stacked_h.n_cols == 4);
  arma::uword row = 0;
  for (int s = 0; s < cfg.n_surfaces; ++s) {
    const auto& block = ch.bs_surf[s];
    for (arma::uword i = 0; i < block.n_rows; ++i)
      for (arma::uword j = 0; j < block.n_cols; ++j)
        CHECK(ch.stacked_h(row + i, j) == block(i, j));
    row += block.n_rows;
  }
  for (int k = 0; k < cfg.n_users; ++k) {
    arma::uword at = 0;
    for (int s = 0; s < cfg.n_surfaces; ++s) {
      for (arma::uword i = 0; i < ch.surf_ue[s][k].n_elem; ++i)
        CHECK(ch.stacked_g[k](at + i) == ch.surf_ue[s][k](i));
      at += ch.surf_ue[s][k].n_elem;
    }
  }
}

TEST_CASE("realize_channels with no surfaces leaves only direct links") {
  SystemConfig cfg = small_config();
  cfg.n_surfaces = 0;
  cfg.elements_per_surface = {};
  const DropGeometry geo = sample_geometry(cfg, 0);
  Rng rng(1);
  const ChannelRealization ch = realize_channels(cfg, geo, rng);
  CHECK(ch.stacked_h.n_rows == 0);
  CHECK(ch.stacked_g[0].n_elem == 0);
  CHECK(ch.direct.size() == 2);
}

TEST_CASE("realizations are finite with positive gains over many drops") {
  SystemConfig cfg = small_config();
  for (int d = 0; d < 10000; ++d) {
    const DropGeometry geo = sample_geometry(cfg, d);
    Rng rng(derive_seed(cfg.master_seed, d, kChannelStream));
    const LargeScaleGains gains = sample_large_scale(cfg, geo, rng);
    REQUIRE(gains.bs_ue_var.min() > 0.0);
    REQUIRE(gains.surf_ue_var.min() > 0.0);
    REQUIRE(gains.bs_surf_var.min() > 0.0);
    REQUIRE(gains.bs_ue_var.is_finite());
    REQUIRE(gains.surf_ue_var.is_finite());
  }
  // full realization spot check on fewer drops
  for (int d = 0; d < 200; ++d) {
    const DropGeometry geo = sample_geometry(cfg, d);
    Rng rng(derive_seed(cfg.master_seed, d, kChannelStream));
    const ChannelRealization ch = realize_channels(cfg, geo, rng);
    for (const auto& f : ch.direct) REQUIRE(f.is_finite());
    REQUIRE(ch.stacked_h.is_finite());
    for (const auto& g : ch.stacked_g) REQUIRE(g.is_finite());
  }
}

TEST_CASE("fading statistics survive the full pipeline") {
  // force unit variances: shadowing off and geometry pinned via the gain model
  SystemConfig cfg;
  cfg.n_bs_antennas = 2048;
  cfg.n_users = 1;
  cfg.n_surfaces = 1;
  cfg.elements_per_surface = {4096};
  cfg.shadow_sigma_db = 0.0;
  cfg.bs_surf_gain_model = BsSurfGainModel::kUnit;
  const DropGeometry geo = sample_geometry(cfg, 0);
  Rng rng(123);
  const LargeScaleGains gains = sample_large_scale(cfg, geo, rng);
  Rng rng2(derive_seed(cfg.master_seed, 0, kChannelStream));
  const ChannelRealization ch = realize_channels(cfg, geo, rng2);

  const double f_second =
      arma::accu(arma::square(arma::abs(ch.direct[0]))) / ch.direct[0].n_elem;
  CHECK(f_second == doctest::Approx(gains.bs_ue_var(0)).epsilon(0.05));
  const double g_second =
      arma::accu(arma::square(arma::abs(ch.stacked_g[0]))) / ch.stacked_g[0].n_elem;
  CHECK(g_second == doctest::Approx(gains.surf_ue_var(0, 0)).epsilon(0.05));
  const double h_second =
      arma::accu(arma::square(arma::abs(ch.stacked_h))) / ch.stacked_h.n_elem;
  CHECK(h_second == doctest::Approx(1.0).epsilon(0.05));  // unit-gain Rician
}

TEST_CASE("realizations from different drops are uncorrelated") {
  SystemConfig cfg = small_config();
  arma::cx_double acc(0.0, 0.0);
  int n = 0;
  for (int d = 0; d < 2000; d += 2) {
    Rng ra(derive_seed(cfg.master_seed, d, kChannelStream));
    Rng rb(derive_seed(cfg.master_seed, d + 1, kChannelStream));
    const DropGeometry ga = sample_geometry(cfg, d);
    const DropGeometry gb = sample_geometry(cfg, d + 1);
    const ChannelRealization a = realize_channels(cfg, ga, ra);
    const ChannelRealization b = realize_channels(cfg, gb, rb);
    // normalized entries: correlate the small-scale parts
    for (arma::uword i = 0; i < a.direct[0].n_elem; ++i) {
      acc += (a.direct[0](i) / std::sqrt(arma::accu(arma::square(arma::abs(a.direct[0]))))) *
             std::conj(b.direct[0](i) / std::sqrt(arma::accu(arma::square(arma::abs(b.direct[0])))));
      ++n;
    }
  }
  CHECK(std::abs(acc) / n < 0.05);
}

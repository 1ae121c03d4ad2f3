#include <doctest.h>

#include <cmath>

#include "irvs/baselines.hpp"
#include "irvs/beamforming.hpp"
#include "irvs/channel.hpp"
#include "irvs/metrics.hpp"

using namespace irvs;

namespace {

std::vector<arma::cx_vec> random_direct(int k_users, int nb, Rng& rng) {
  std::vector<arma::cx_vec> f(k_users);
  for (auto& v : f) {
    v.set_size(nb);
    for (auto& x : v) x = rng.complex_gaussian(1.0);
  }
  return f;
}

}  // namespace

TEST_CASE("tdma_rate_no_irs closed forms") {
  SUBCASE("unit SNR gives one bit") {
    // pick f and noise so that ||f||^2 P / noise = 1
    std::vector<arma::cx_vec> f = {arma::cx_vec{arma::cx_double(1.0, 0.0)}};
    const auto rates = tdma_rate_no_irs(f, 2.0, 2.0);
    CHECK(rates[0] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("zero channel gives zero rate") {
    std::vector<arma::cx_vec> f = {arma::cx_vec(4, arma::fill::zeros)};
    CHECK(tdma_rate_no_irs(f, 20.0, 1e-13)[0] == 0.0);
  }
  SUBCASE("two users halve the slot share") {
    arma::cx_vec v = {arma::cx_double(1.0, 0.0)};
    const double one = tdma_rate_no_irs({v}, 2.0, 2.0)[0];
    const auto two = tdma_rate_no_irs({v, v}, 2.0, 2.0);
    CHECK(two[0] == doctest::Approx(one / 2.0).epsilon(1e-12));
    CHECK(two[1] == doctest::Approx(one / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("noma_allocation order and coefficients") {
  Rng rng(3);
  for (int k_users = 1; k_users <= 6; ++k_users) {
    const auto f = random_direct(k_users, 4, rng);
    const NomaAllocation a = noma_allocation(f);
    REQUIRE(static_cast<int>(a.order.size()) == k_users);
    // coefficients sum to one and are descending and positive
    double sum = 0.0;
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
      sum += a.coefficients[i];
      CHECK(a.coefficients[i] > 0.0);
      CHECK(a.coefficients[i] <= 1.0);
      if (i > 0) CHECK(a.coefficients[i] < a.coefficients[i - 1]);
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    // order is ascending in channel gain
    for (std::size_t i = 1; i < a.order.size(); ++i) {
      const double prev = std::pow(arma::norm(f[a.order[i - 1]], 2), 2);
      const double cur = std::pow(arma::norm(f[a.order[i]], 2), 2);
      CHECK(prev <= cur);
    }
  }
  SUBCASE("K=2 coefficients are 2/3 and 1/3") {
    const auto f = random_direct(2, 2, rng);
    const NomaAllocation a = noma_allocation(f);
    CHECK(a.coefficients[0] == doctest::Approx(2.0 / 3.0));
    CHECK(a.coefficients[1] == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("ties break by user index") {
    arma::cx_vec v = {arma::cx_double(1.0, 0.0)};
    const NomaAllocation a = noma_allocation({v, v, v});
    CHECK(a.order == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("noma_rates hand-computed instance") {
  // K=2, N_b=2: gains 1 and 4, P=1, noise=1.
  // weak user: a=2/3, SINR = (2/3)/(1/3 + 1) = 1/2      -> log2(3/2)
  // strong user: a=1/3, no residual, SINR = 4/3          -> log2(7/3)
  std::vector<arma::cx_vec> f(2);
  f[0] = {arma::cx_double(1.0, 0.0), arma::cx_double(0.0, 0.0)};
  f[1] = {arma::cx_double(0.0, 0.0), arma::cx_double(0.0, 2.0)};
  const auto rates = noma_rates(f, 1.0, 1.0);
  CHECK(rates[0] == doctest::Approx(0.5849625007211562).epsilon(1e-12));
  CHECK(rates[1] == doctest::Approx(1.2223924213364481).epsilon(1e-12));
}

TEST_CASE("noma degenerates to full-power single user") {
  std::vector<arma::cx_vec> f = {arma::cx_vec{arma::cx_double(3.0, 0.0)}};
  const auto rates = noma_rates(f, 2.0, 1.0);
  CHECK(rates[0] == doctest::Approx(std::log2(1.0 + 9.0 * 2.0)).epsilon(1e-12));
}

TEST_CASE("rps_rate edge cases") {
  Rng ch_rng(17);
  SUBCASE("no surfaces matches the TDMA rate") {
    arma::cx_vec f(4, arma::fill::none);
    for (auto& v : f) v = ch_rng.complex_gaussian(1.0);
    Rng rng(5);
    const double rps = rps_rate(arma::cx_vec(), arma::cx_mat(0, 4), f, std::nullopt,
                                2.0, 1.0, 2, rng);
    const double tdma = tdma_rate_no_irs({f, f}, 2.0, 1.0)[0];
    CHECK(rps == doctest::Approx(tdma).epsilon(1e-12));
  }
  SUBCASE("random phases never beat the optimized ones") {
    const arma::uword nr = 64, nb = 4;
    for (int trial = 0; trial < 50; ++trial) {
      arma::cx_vec g(nr), f(nb);
      arma::cx_mat h(nr, nb);
      for (auto& v : g) v = ch_rng.complex_gaussian(1.0);
      for (auto& v : h) v = ch_rng.complex_gaussian(1.0);
      for (auto& v : f) v = ch_rng.complex_gaussian(1.0);
      const AoResult ao = alternating_optimize(g, h, f, 3);
      const arma::cx_rowvec eff = effective_channel(g, ao.phases, h, f);
      const double cps = user_rate(eff, ao.w, 2.0, 1.0, 1);
      Rng rng(1000 + trial);
      const double rps = rps_rate(g, h, f, std::nullopt, 2.0, 1.0, 1, rng);
      CHECK(rps <= cps + 1e-12);
    }
  }
  SUBCASE("reflected energy helps on average") {
    const arma::uword nr = 32, nb = 2;
    arma::cx_vec g(nr), f(nb);
    arma::cx_mat h(nr, nb);
    for (auto& v : g) v = ch_rng.complex_gaussian(1.0);
    for (auto& v : h) v = ch_rng.complex_gaussian(1.0);
    for (auto& v : f) v = ch_rng.complex_gaussian(1.0);
    const double no_irs = tdma_rate_no_irs({f}, 2.0, 1.0)[0];
    Rng rng(99);
    double acc = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i)
      acc += rps_rate(g, h, f, std::nullopt, 2.0, 1.0, 1, rng);
    CHECK(acc / n > no_irs);
  }
}

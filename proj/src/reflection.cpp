#include "irvs/reflection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irvs {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_angle(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod can return exactly 2*pi after the negative adjustment rounds up
  if (w >= kTwoPi) w = 0.0;
  return w;
}

DiscretePhaseSet DiscretePhaseSet::from_bits(int bits) {
  if (bits < 1) throw std::invalid_argument("phase set needs bits >= 1");
  if (bits > 30) throw std::invalid_argument("phase set bits out of range");
  DiscretePhaseSet s;
  s.bits = bits;
  s.levels = 1 << bits;
  s.step = kTwoPi / s.levels;
  return s;
}

bool DiscretePhaseSet::contains(double phi, double tol) const {
  const double idx = phi / step;
  const double nearest = std::round(idx);
  return nearest >= 0.0 && nearest < levels && std::abs(idx - nearest) * step <= tol;
}

arma::cx_vec reflection_coefficients(const PhaseVector& pv) {
  return arma::cx_vec(arma::cos(pv.phases), arma::sin(pv.phases));
}

double quantize_mid_tread(double phi, const DiscretePhaseSet& set) {
  // floor(x + 0.5): half-step ties round up, as the mid-tread rule states
  const double level = std::floor(phi / set.step + 0.5);
  return wrap_angle(set.step * level);
}

PhaseVector quantize_phases(const PhaseVector& pv, const DiscretePhaseSet& set) {
  PhaseVector out;
  out.phases.set_size(pv.phases.n_elem);
  for (arma::uword i = 0; i < pv.phases.n_elem; ++i)
    out.phases(i) = quantize_mid_tread(pv.phases(i), set);
  return out;
}

PhaseVector random_phases(arma::uword n, const std::optional<DiscretePhaseSet>& set,
                          Rng& rng) {
  PhaseVector pv;
  pv.phases.set_size(n);
  if (set) {
    for (arma::uword i = 0; i < n; ++i)
      pv.phases(i) = set->step * static_cast<double>(rng.uniform_index(set->levels));
  } else {
    for (arma::uword i = 0; i < n; ++i) pv.phases(i) = rng.uniform(0.0, kTwoPi);
  }
  return pv;
}

}  // namespace irvs

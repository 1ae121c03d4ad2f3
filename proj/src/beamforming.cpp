#include "irvs/beamforming.hpp"

#include <cmath>
#include <stdexcept>

namespace irvs {

arma::cx_rowvec effective_channel(const arma::cx_vec& g, const PhaseVector& phases,
                                  const arma::cx_mat& h, const arma::cx_vec& f) {
  if (g.n_elem != h.n_rows || f.n_elem != h.n_cols || g.n_elem != phases.phases.n_elem)
    throw std::invalid_argument("effective_channel: dimension mismatch");
  if (g.n_elem == 0) return arma::strans(f);
  const arma::cx_vec weighted = g % reflection_coefficients(phases);
  return arma::strans(weighted) * h + arma::strans(f);
}

PhaseVector optimal_phases_given_w(const arma::cx_vec& g, const arma::cx_mat& h,
                                   const arma::cx_vec& f, const Beamformer& w) {
  const arma::cx_vec chi = g % (h * w.w);            // diag(g^T) H w
  const arma::cx_double fw = arma::dot(f, w.w);      // f^T w, unconjugated
  const double phi0 = (std::abs(fw) > 0.0) ? std::arg(fw) : 0.0;
  PhaseVector pv;
  pv.phases.set_size(chi.n_elem);
  for (arma::uword n = 0; n < chi.n_elem; ++n) {
    // arg(0) = 0, so zero entries land on phi0 as required
    pv.phases(n) = wrap_angle(phi0 - std::arg(chi(n)));
  }
  return pv;
}

Beamformer mrt(const arma::cx_rowvec& effective) {
  const double nrm = arma::norm(effective, 2);
  Beamformer bf;
  if (nrm == 0.0) {
    // degenerate all-zero channel; callers flag this in the drop log
    bf.w.zeros(effective.n_elem);
    if (effective.n_elem > 0) bf.w(0) = 1.0;
    return bf;
  }
  bf.w = arma::conj(arma::strans(effective)) / nrm;
  return bf;
}

AoResult alternating_optimize(const arma::cx_vec& g, const arma::cx_mat& h,
                              const arma::cx_vec& f, const AoOptions& opts) {
  if (opts.iterations < 1) throw std::invalid_argument("ao: iterations must be >= 1");

  AoResult res;
  res.w = mrt(arma::strans(f));  // warm start on the direct channel
  res.phases.phases.set_size(g.n_elem);
  res.phases.phases.zeros();

  const int cap = opts.rel_tolerance ? opts.max_iterations : opts.iterations;
  double prev = -1.0;
  for (int it = 0; it < cap; ++it) {
    res.phases = optimal_phases_given_w(g, h, f, res.w);
    const arma::cx_rowvec eff = effective_channel(g, res.phases, h, f);
    res.w = mrt(eff);
    const double obj = std::norm(arma::as_scalar(eff * res.w.w));
    res.objective_trace.push_back(obj);
    if (opts.rel_tolerance && it > 0 &&
        std::abs(obj - prev) <= *opts.rel_tolerance * std::max(obj, 1e-300))
      break;
    prev = obj;
  }
  return res;
}

AoResult alternating_optimize(const arma::cx_vec& g, const arma::cx_mat& h,
                              const arma::cx_vec& f, int iterations) {
  AoOptions opts;
  opts.iterations = iterations;
  return alternating_optimize(g, h, f, opts);
}

}  // namespace irvs

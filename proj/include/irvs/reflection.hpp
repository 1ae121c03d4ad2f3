#pragma once

#include <optional>

#include <armadillo>

#include "irvs/rng.hpp"

namespace irvs {

/// Reduces an angle to [0, 2*pi).
double wrap_angle(double phi);

/// Per-element phase shifts, flattened over surfaces (length N_r).
/// Entries are kept in [0, 2*pi); reflection amplitude is fixed to 1.
struct PhaseVector {
  arma::vec phases;
};

/// The b-bit phase codebook {0, step, ..., (levels-1)*step}, step = 2*pi/2^b.
struct DiscretePhaseSet {
  int bits = 1;
  int levels = 2;
  double step = 0.0;

  static DiscretePhaseSet from_bits(int bits);  // throws if bits < 1
  bool contains(double phi, double tol = 1e-9) const;
};

/// Diagonal entries of the reflection matrix: e^{j phi_n}, all unit modulus.
arma::cx_vec reflection_coefficients(const PhaseVector& pv);

/// Mid-tread uniform quantizer step*floor(phi/step + 0.5), reduced mod 2*pi
/// so the result is always a codebook member (a phase of 2*pi is 0).
double quantize_mid_tread(double phi, const DiscretePhaseSet& set);

/// Element-wise quantization of a phase vector.
PhaseVector quantize_phases(const PhaseVector& pv, const DiscretePhaseSet& set);

/// n random phases: uniform on [0, 2*pi) when set is empty, otherwise
/// uniform over the discrete codebook.
PhaseVector random_phases(arma::uword n, const std::optional<DiscretePhaseSet>& set,
                          Rng& rng);

}  // namespace irvs

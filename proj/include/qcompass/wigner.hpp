#pragma once

#include <array>
#include <complex>
#include <string>

#include "qcompass/analytic_state.hpp"
#include "qcompass/direction.hpp"
#include "qcompass/oscillator.hpp"
#include "qcompass/quadrature.hpp"

namespace qcompass {

/// Ordered pair (A, B) labelling the cross-Wigner term of conj(A) with B.
struct DirectionPair {
  Direction first;
  Direction second;

  /// True for NN, NS, NE, NW, SE, SW, EE, EW, which have their own closed
  /// forms; the other eight follow from symmetry relations.
  bool is_explicit() const;
  std::string name() const;

  friend bool operator==(const DirectionPair&, const DirectionPair&) = default;
};

std::array<DirectionPair, 16> all_direction_pairs();

/// a = (h / hbar) p + 2 i lambda h x and its partner (h / hbar) p - 2 i lambda h x.
struct PhaseArgument {
  cplx a;
  cplx a_conj;
};

PhaseArgument make_phase_argument(double p, double x, const OscillatorParams& params);

/// exp(-(2 / hbar omega) (m omega^2 x^2 / 2 + p^2 / 2m)), shared by every component.
double gaussian_envelope(double p, double x, const OscillatorParams& params);

struct WignerOptions {
  /// Multiplies the N_q^2 / (4 pi hbar) prefactor. Anything but 1 is a
  /// deliberate perturbation for negative-control runs.
  double prefactor_scale = 1.0;
};

struct WignerSample {
  double value = 0.0;
  /// |Im(sum of phased components)|
  double imag_residue = 0.0;
  /// max modulus over the 16 phased components
  double component_scale = 0.0;
};

/// Closed-form Wigner function of the compass state for one (n, params).
/// Caches N_q and the q-products shared by all points.
class CompassWigner {
 public:
  CompassWigner(int n, const OscillatorParams& params, WignerOptions options = {});

  /// W_n^{AB}(p, x) including the N_q^2 / (4 pi hbar) prefactor.
  cplx component(DirectionPair pair, double p, double x) const;

  /// Sum of the 16 phased components with the imaginary residue reported.
  WignerSample sample(double p, double x) const;

  /// Real part of the 16-term sum. Throws ConsistencyError when the
  /// imaginary residue exceeds 1e-9 of the largest component modulus.
  double total(double p, double x) const;

  /// W^{NN} + W^{SS} + W^{EE} + W^{WW}, the four Gaussian lobes without
  /// interference terms.
  double diagonal(double p, double x) const;

  int n() const { return n_; }
  const OscillatorParams& params() const { return params_; }
  double normalization() const { return normalization_; }

 private:
  cplx explicit_component(DirectionPair pair, double p, double x) const;
  cplx k_sum(int ik_sign, int a_sign, int a_conj_sign, const PhaseArgument& arg) const;

  int n_;
  OscillatorParams params_;
  WignerOptions options_;
  double normalization_;
  double prefactor_;
  double q_minus_n_;
  double k_sum_scale_;
};

cplx component_closed(DirectionPair pair, int n, double p, double x, const OscillatorParams& params);

double total(int n, double p, double x, const OscillatorParams& params);

/// Cross-Wigner transform of two states,
///   (1 / 2 pi hbar) int conj(A(x - y/2)) B(x + y/2) e^{-i p y / hbar} dy,
/// on the uniform rule of `quad`. Throws QuadratureWindowError if the
/// integrand has not decayed to 1e-14 of its peak at the window edge.
cplx cross_wigner_oracle(const AnalyticState& a, const AnalyticState& b, double p, double x,
                         const OscillatorParams& params, const QuadratureSpec& quad);

}  // namespace qcompass

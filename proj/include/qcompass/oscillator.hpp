#pragma once

#include <complex>

#include "qcompass/analytic_state.hpp"
#include "qcompass/direction.hpp"

namespace qcompass {

/// Physical constants of the q-oscillator. lambda = m omega / (2 hbar) and
/// q = exp(-lambda h^2) are derived once and never mutated independently.
class OscillatorParams {
 public:
  OscillatorParams(double mass, double omega, double hbar, double h);

  double mass() const { return mass_; }
  double omega() const { return omega_; }
  double hbar() const { return hbar_; }
  double h() const { return h_; }
  double lambda() const { return lambda_; }
  double q() const { return q_; }

 private:
  double mass_;
  double omega_;
  double hbar_;
  double h_;
  double lambda_;
  double q_;
};

/// Throws InvalidArgument unless every input is strictly positive and q < 1.
OscillatorParams make_params(double mass, double omega, double hbar, double h);

/// Sign of the deformation step used inside a formula. `reflected` evaluates
/// the same expression with h replaced by -h (the E and N families).
enum class StepSign { forward, reflected };

/// c_n = (2 lambda / pi)^{1/4} q^{n/2} (q;q)_n^{-1/2}
double norm_const_cn(int n, const OscillatorParams& params);

/// x-representation stationary state c_n H_n(-e^{-2i lambda h z}; q) e^{-lambda z^2}.
cplx psi_x(int n, cplx z, const OscillatorParams& params, StepSign sign = StepSign::forward);

/// p-representation model c_n H_n(-q^{n-1} e^{-2 lambda h z}; 1/q) e^{-lambda z^2},
/// evaluated with the literal base-1/q Rogers-Szego sum.
cplx psi_p_model(int n, cplx z, const OscillatorParams& params, StepSign sign = StepSign::forward);

/// Ordinary oscillator eigenfunction, the h -> 0 target of both families.
double ho_eigenstate(int n, double x, double lambda);

enum class LadderSign { raising, lowering };

/// Applies the finite-difference operator b_d^+ or b_d^- to a state.
///
/// Shifts act as argument translations, (e^{-h d/dx} f)(x) = f(x - h) and
/// (e^{(ih/2) d/dx} f)(x) = f(x + ih/2); the Gaussian and exponential
/// conjugations are multiplicative factors. Throws DegenerateParameter at q = 1.
AnalyticState ladder_apply(Direction direction, LadderSign sign, const AnalyticState& state,
                           const OscillatorParams& params);

}  // namespace qcompass

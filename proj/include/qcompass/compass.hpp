#pragma once

#include <complex>

#include "qcompass/analytic_state.hpp"
#include "qcompass/direction.hpp"
#include "qcompass/oscillator.hpp"
#include "qcompass/quadrature.hpp"

namespace qcompass {

/// W = psi_x, E = psi_x(h -> -h), S = psi_p_model, N = psi_p_model(h -> -h).
cplx component(Direction direction, int n, cplx z, const OscillatorParams& params);

/// The component as a lazily evaluated state, for use with ladder_apply.
AnalyticState component_state(Direction direction, int n, const OscillatorParams& params);

/// Superposition weight of a component: N -> e^{i n pi}, S -> e^{2 i n pi},
/// E -> e^{i n pi / 2}, W -> e^{3 i n pi / 2}. Exact powers of i.
cplx phase_factor(Direction direction, int n);

/// Number of quarter turns in phase_factor, reduced mod 4.
int phase_quarter_turns(Direction direction, int n);

/// Braced expression inside the closed-form normalization, before the
/// inverse square root. It is 4 at n = 0.
cplx normalization_braces(int n, const OscillatorParams& params);

/// N_q from the closed form. Throws ConsistencyError when Im(braces) exceeds
/// 1e-10 relative and DegenerateNormalization when Re(braces) <= 0.
double normalization_analytic(int n, const OscillatorParams& params);

/// N_q such that the quadrature of |Psi|^2 equals one.
double normalization_numeric(int n, const OscillatorParams& params, const QuadratureSpec& quad);
double normalization_numeric(int n, const OscillatorParams& params);

enum class NormalizationMode { analytic, numeric };

struct CompassSpec {
  int n = 0;
  OscillatorParams params;
  NormalizationMode normalization_mode = NormalizationMode::analytic;
};

/// Normalized four-component superposition (N_q / 2) sum_d phase_d psi^d.
/// N_q is computed once at construction.
class CompassState {
 public:
  explicit CompassState(const CompassSpec& spec);

  cplx operator()(cplx z) const;
  double normalization() const { return normalization_; }
  const CompassSpec& spec() const { return spec_; }
  AnalyticState as_state() const;

 private:
  CompassSpec spec_;
  double normalization_;
};

cplx compass_amplitude(const CompassSpec& spec, cplx z);

/// Analytic vs quadrature N_q, reported side by side.
struct NormalizationCheck {
  double analytic = 0.0;
  double numeric = 0.0;
  double braces_imag_relative = 0.0;
  double relative_difference = 0.0;
  bool consistent(double tolerance = 1e-6) const { return relative_difference <= tolerance; }
};

NormalizationCheck check_normalization(int n, const OscillatorParams& params);

enum class CatPair { NS, EW };

/// Two-component cat state, equal-weight sum of the two phased components
/// normalized by quadrature.
class CatState {
 public:
  CatState(CatPair pair, int n, const OscillatorParams& params, const QuadratureSpec& quad);
  CatState(CatPair pair, int n, const OscillatorParams& params);

  cplx operator()(cplx z) const;
  double normalization() const { return normalization_; }
  AnalyticState as_state() const;

 private:
  cplx unnormalized(cplx z) const;

  CatPair pair_;
  int n_;
  OscillatorParams params_;
  double normalization_;
};

cplx cat_amplitude(CatPair pair, int n, cplx z, const OscillatorParams& params, const QuadratureSpec& quad);

}  // namespace qcompass

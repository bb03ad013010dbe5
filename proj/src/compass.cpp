#include "qcompass/compass.hpp"

#include <cmath>
#include <string>

#include "qcompass/errors.hpp"
#include "qcompass/qkernel.hpp"

namespace qcompass {

namespace {

constexpr double kBracesImagGate = 1e-10;

cplx quarter_turn(int turns) {
  switch (((turns % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

cplx unnormalized_compass(int n, cplx z, const OscillatorParams& params) {
  cplx sum{0.0};
  for (Direction d : kDirections) {
    sum += phase_factor(d, n) * component(d, n, z, params);
  }
  return 0.5 * sum;
}

}  // namespace

cplx component(Direction direction, int n, cplx z, const OscillatorParams& params) {
  switch (direction) {
    case Direction::West: return psi_x(n, z, params, StepSign::forward);
    case Direction::East: return psi_x(n, z, params, StepSign::reflected);
    case Direction::South: return psi_p_model(n, z, params, StepSign::forward);
    case Direction::North: return psi_p_model(n, z, params, StepSign::reflected);
  }
  throw InvalidArgument("component: unknown direction");
}

AnalyticState component_state(Direction direction, int n, const OscillatorParams& params) {
  return AnalyticState([=](cplx z) { return component(direction, n, z, params); },
                       std::string("psi") + to_char(direction) + "_" + std::to_string(n));
}

int phase_quarter_turns(Direction direction, int n) {
  if (n < 0) throw InvalidArgument("phase_factor: n must be nonnegative");
  const int r = n % 4;
  switch (direction) {
    case Direction::North: return (2 * r) % 4;
    case Direction::South: return 0;
    case Direction::East: return r;
    case Direction::West: return (3 * r) % 4;
  }
  return 0;
}

cplx phase_factor(Direction direction, int n) { return quarter_turn(phase_quarter_turns(direction, n)); }

cplx normalization_braces(int n, const OscillatorParams& params) {
  if (n < 0) throw InvalidArgument("normalization_braces: n must be nonnegative");
  const double q = params.q();
  const double qq_n = q_pochhammer(q, q, n);
  if (!(qq_n > 0.0)) {
    throw DegenerateParameter("normalization_braces: (q;q)_n vanishes");
  }
  const cplx sign_n = quarter_turn(2 * (n % 4));
  const cplx i_to_n = quarter_turn(n % 4);
  const cplx i_to_minus_n = quarter_turn(-(n % 4));
  const double q_minus_n = std::pow(q, -n);

  cplx sum{0.0};
  for (int k = 0; k <= n; ++k) {
    const double coefficient = q_pochhammer(q_minus_n, q, k) / q_pochhammer(q, q, k);
    const cplx q_ik = q_power(q, cplx(0.0, k));
    const cplx q_minus_ik = q_power(q, cplx(0.0, -k));
    const cplx bracket = sign_n * q_pochhammer(std::pow(q, k), q, n) +
                         i_to_n * q_pochhammer(q_ik, cplx(q), n) +
                         i_to_minus_n * q_pochhammer(q_minus_ik, cplx(q), n);
    sum += coefficient * bracket * std::pow(q, n * k);
  }
  return 1.0 + std::pow(q, n) / qq_n * sum;
}

double normalization_analytic(int n, const OscillatorParams& params) {
  const cplx braces = normalization_braces(n, params);
  if (std::abs(braces.imag()) > kBracesImagGate * std::abs(braces)) {
    throw ConsistencyError("normalization_analytic: imaginary part of braces " + std::to_string(braces.imag()) +
                           " exceeds 1e-10 relative");
  }
  if (!(braces.real() > 0.0)) {
    throw DegenerateNormalization("normalization_analytic: braces = " + std::to_string(braces.real()) +
                                  " is not positive");
  }
  return 1.0 / std::sqrt(braces.real());
}

double normalization_numeric(int n, const OscillatorParams& params, const QuadratureSpec& quad) {
  const auto result = integrate_uniform(quad, [&](double x) { return std::norm(unnormalized_compass(n, x, params)); });
  if (!(result.value > 0.0)) {
    throw DegenerateNormalization("normalization_numeric: vanishing norm");
  }
  return 1.0 / std::sqrt(result.value);
}

double normalization_numeric(int n, const OscillatorParams& params) {
  return normalization_numeric(n, params, position_quadrature(n, params));
}

CompassState::CompassState(const CompassSpec& spec)
    : spec_(spec),
      normalization_(spec.normalization_mode == NormalizationMode::analytic
                         ? normalization_analytic(spec.n, spec.params)
                         : normalization_numeric(spec.n, spec.params)) {}

cplx CompassState::operator()(cplx z) const { return normalization_ * unnormalized_compass(spec_.n, z, spec_.params); }

AnalyticState CompassState::as_state() const {
  return AnalyticState([self = *this](cplx z) { return self(z); }, "compass_" + std::to_string(spec_.n));
}

cplx compass_amplitude(const CompassSpec& spec, cplx z) { return CompassState(spec)(z); }

NormalizationCheck check_normalization(int n, const OscillatorParams& params) {
  NormalizationCheck check;
  const cplx braces = normalization_braces(n, params);
  check.braces_imag_relative = std::abs(braces.imag()) / std::abs(braces);
  check.analytic = normalization_analytic(n, params);
  check.numeric = normalization_numeric(n, params);
  check.relative_difference = std::abs(check.analytic - check.numeric) / std::abs(check.numeric);
  return check;
}

CatState::CatState(CatPair pair, int n, const OscillatorParams& params, const QuadratureSpec& quad)
    : pair_(pair), n_(n), params_(params), normalization_(1.0) {
  if (n < 0) throw InvalidArgument("CatState: n must be nonnegative");
  const auto result = integrate_uniform(quad, [&](double x) { return std::norm(unnormalized(x)); });
  if (!(result.value > 0.0)) {
    throw DegenerateNormalization("CatState: the two phased components cancel");
  }
  normalization_ = 1.0 / std::sqrt(result.value);
}

CatState::CatState(CatPair pair, int n, const OscillatorParams& params)
    : CatState(pair, n, params, position_quadrature(n, params)) {}

cplx CatState::unnormalized(cplx z) const {
  const Direction a = pair_ == CatPair::NS ? Direction::North : Direction::East;
  const Direction b = pair_ == CatPair::NS ? Direction::South : Direction::West;
  return phase_factor(a, n_) * component(a, n_, z, params_) + phase_factor(b, n_) * component(b, n_, z, params_);
}

cplx CatState::operator()(cplx z) const { return normalization_ * unnormalized(z); }

AnalyticState CatState::as_state() const {
  return AnalyticState([self = *this](cplx z) { return self(z); },
                       std::string(pair_ == CatPair::NS ? "cat_NS_" : "cat_EW_") + std::to_string(n_));
}

cplx cat_amplitude(CatPair pair, int n, cplx z, const OscillatorParams& params, const QuadratureSpec& quad) {
  return CatState(pair, n, params, quad)(z);
}

}  // namespace qcompass

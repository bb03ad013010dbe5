#include "qcompass/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcompass/errors.hpp"
#include "qcompass/qkernel.hpp"

namespace qcompass {

namespace {

constexpr cplx kI{0.0, 1.0};

double signed_step(const OscillatorParams& params, StepSign sign) {
  return sign == StepSign::forward ? params.h() : -params.h();
}

void require_quantum_number(int n, const char* where) {
  if (n < 0) {
    throw InvalidArgument(std::string(where) + ": n must be nonnegative");
  }
}

}  // namespace

OscillatorParams::OscillatorParams(double mass, double omega, double hbar, double h)
    : mass_(mass), omega_(omega), hbar_(hbar), h_(h) {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(mass)) throw InvalidArgument("OscillatorParams: mass must satisfy m > 0");
  if (!positive(omega)) throw InvalidArgument("OscillatorParams: omega must satisfy omega > 0");
  if (!positive(hbar)) throw InvalidArgument("OscillatorParams: hbar must satisfy hbar > 0");
  if (!positive(h)) throw InvalidArgument("OscillatorParams: deformation step must satisfy h > 0");
  lambda_ = mass * omega / (2.0 * hbar);
  q_ = std::exp(-lambda_ * h * h);
  if (!(q_ > 0.0 && q_ < 1.0)) {
    throw InvalidArgument("OscillatorParams: q = exp(-lambda h^2) must lie strictly inside (0, 1)");
  }
}

OscillatorParams make_params(double mass, double omega, double hbar, double h) {
  return OscillatorParams(mass, omega, hbar, h);
}

double norm_const_cn(int n, const OscillatorParams& params) {
  require_quantum_number(n, "norm_const_cn");
  const double q = params.q();
  const double qq = q_pochhammer(q, q, n);
  if (!(qq > 0.0) || !std::isnormal(qq)) {
    throw DegenerateParameter("norm_const_cn: (q;q)_n underflows for n = " + std::to_string(n) +
                              ", q = " + std::to_string(q));
  }
  return std::pow(2.0 * params.lambda() / std::numbers::pi, 0.25) * std::pow(q, 0.5 * n) / std::sqrt(qq);
}

cplx psi_x(int n, cplx z, const OscillatorParams& params, StepSign sign) {
  require_quantum_number(n, "psi_x");
  const double lambda = params.lambda();
  const double h = signed_step(params, sign);
  const cplx arg = std::exp(-2.0 * kI * lambda * h * z);
  const auto rs = rogers_szego_scaled<double>(n, arg, cplx(params.q()));
  return norm_const_cn(n, params) * rs.mantissa * std::exp(rs.log_scale - lambda * z * z);
}

cplx psi_p_model(int n, cplx z, const OscillatorParams& params, StepSign sign) {
  require_quantum_number(n, "psi_p_model");
  const double lambda = params.lambda();
  const double h = signed_step(params, sign);
  const double q = params.q();
  const cplx arg = std::pow(q, n - 1) * std::exp(-2.0 * lambda * h * z);
  const auto rs = rogers_szego_scaled<double>(n, arg, cplx(1.0 / q));
  return norm_const_cn(n, params) * rs.mantissa * std::exp(rs.log_scale - lambda * z * z);
}

double ho_eigenstate(int n, double x, double lambda) {
  require_quantum_number(n, "ho_eigenstate");
  if (!(lambda > 0.0)) {
    throw InvalidArgument("ho_eigenstate: lambda must be positive");
  }
  double factorial = 1.0;
  for (int i = 2; i <= n; ++i) factorial *= i;
  const double norm =
      1.0 / std::sqrt(std::pow(2.0, n) * factorial * std::sqrt(std::numbers::pi / (2.0 * lambda)));
  return norm * hermite(n, std::sqrt(2.0 * lambda) * x) * std::exp(-lambda * x * x);
}

AnalyticState ladder_apply(Direction direction, LadderSign sign, const AnalyticState& state,
                           const OscillatorParams& params) {
  const double q = params.q();
  if (!(q < 1.0)) {
    throw DegenerateParameter("ladder_apply: q = 1 makes the 1/sqrt(1-q) prefactor singular");
  }
  const double s = sign == LadderSign::raising ? 1.0 : -1.0;
  const double lambda = params.lambda();
  const double h = params.h();
  const double sqrt_q = std::sqrt(q);

  // Every operator has the shape
  //   outer * e^{-s lambda x^2} (c1 E(x) g(x + shift1) - sqrt(q) g(x + shift2)),  g = e^{s lambda x^2} f.
  // b_N is the h -> -h image of b_S, matching psi^N = psi^S with h -> -h.
  double outer = 0.0;
  double c1 = 1.0;
  AnalyticState::Evaluator exponential;
  cplx shift1 = 0.0;
  cplx shift2 = 0.0;
  switch (direction) {
    case Direction::North:
      outer = s;
      c1 = std::pow(q, s);
      exponential = [=](cplx x) { return std::exp(2.0 * lambda * h * x); };
      shift1 = -s * h;
      shift2 = -s * h / 2.0;
      break;
    case Direction::South:
      outer = -s;
      c1 = std::pow(q, s);
      exponential = [=](cplx x) { return std::exp(-2.0 * lambda * h * x); };
      shift1 = s * h;
      shift2 = s * h / 2.0;
      break;
    case Direction::East:
      outer = -s;
      exponential = [=](cplx x) { return std::exp(2.0 * kI * s * lambda * h * x); };
      shift2 = kI * h / 2.0;
      break;
    case Direction::West:
      outer = s;
      exponential = [=](cplx x) { return std::exp(-2.0 * kI * s * lambda * h * x); };
      shift2 = -kI * h / 2.0;
      break;
  }

  const AnalyticState g = multiply(state, [=](cplx x) { return std::exp(s * lambda * x * x); }, "gauss+");
  const AnalyticState first = scale(multiply(translate(g, shift1), exponential, "exp"), c1);
  const AnalyticState second = scale(translate(g, shift2), sqrt_q);
  const AnalyticState inner = multiply(first - second, [=](cplx x) { return std::exp(-s * lambda * x * x); },
                                       "gauss-");

  const cplx prefactor = outer * kI / std::sqrt(1.0 - q);
  const std::string name = std::string("b") + to_char(direction) + (s > 0 ? "+" : "-");
  return AnalyticState([inner, prefactor](cplx x) { return prefactor * inner(x); }, name + "[" + state.label() + "]");
}

}  // namespace qcompass

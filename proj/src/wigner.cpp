#include "qcompass/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qcompass/compass.hpp"
#include "qcompass/errors.hpp"
#include "qcompass/qkernel.hpp"

namespace qcompass {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kRealnessGate = 1e-9;

constexpr DirectionPair pair_of(char a, char b) {
  const auto d = [](char c) {
    switch (c) {
      case 'N': return Direction::North;
      case 'S': return Direction::South;
      case 'E': return Direction::East;
      default: return Direction::West;
    }
  };
  return {d(a), d(b)};
}

cplx phi32(int n, cplx a1, cplx a2, double q) {
  return phi32_terminating<double>(n, a1, a2, cplx(q), cplx(0.0), q, cplx(q));
}

cplx quarter_turn(int turns) {
  switch (((turns % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

constexpr int code(char a, char b) {
  const auto idx = [](char c) { return c == 'N' ? 0 : c == 'S' ? 1 : c == 'E' ? 2 : 3; };
  return 4 * idx(a) + idx(b);
}

constexpr int code(DirectionPair pair) { return code(to_char(pair.first), to_char(pair.second)); }

}  // namespace

bool DirectionPair::is_explicit() const {
  switch (code(*this)) {
    case code('N', 'N'): case code('N', 'S'): case code('N', 'E'): case code('N', 'W'):
    case code('S', 'E'): case code('S', 'W'): case code('E', 'E'): case code('E', 'W'):
      return true;
    default:
      return false;
  }
}

std::string DirectionPair::name() const { return {to_char(first), to_char(second)}; }

std::array<DirectionPair, 16> all_direction_pairs() {
  std::array<DirectionPair, 16> pairs{};
  std::size_t i = 0;
  for (Direction a : kDirections) {
    for (Direction b : kDirections) {
      pairs[i++] = {a, b};
    }
  }
  return pairs;
}

PhaseArgument make_phase_argument(double p, double x, const OscillatorParams& params) {
  const double re = params.h() / params.hbar() * p;
  const double im = 2.0 * params.lambda() * params.h() * x;
  return {cplx(re, im), cplx(re, -im)};
}

double gaussian_envelope(double p, double x, const OscillatorParams& params) {
  const double m = params.mass();
  const double w = params.omega();
  return std::exp(-2.0 / (params.hbar() * w) * (m * w * w * x * x / 2.0 + p * p / (2.0 * m)));
}

CompassWigner::CompassWigner(int n, const OscillatorParams& params, WignerOptions options)
    : n_(n), params_(params), options_(options), normalization_(normalization_analytic(n, params)) {
  const double q = params.q();
  prefactor_ = options_.prefactor_scale * normalization_ * normalization_ / (4.0 * std::numbers::pi * params.hbar());
  q_minus_n_ = std::pow(q, -n);
  k_sum_scale_ = std::pow(q, n) / q_pochhammer(q, q, n);
}

cplx CompassWigner::k_sum(int ik_sign, int a_sign, int a_conj_sign, const PhaseArgument& arg) const {
  const double q = params_.q();
  const cplx ratio = std::pow(q, n_) * std::exp(static_cast<double>(a_conj_sign) * kI * arg.a_conj);
  const cplx e_a = std::exp(static_cast<double>(a_sign) * arg.a);
  cplx sum{0.0};
  cplx ratio_power{1.0};
  for (int k = 0; k <= n_; ++k) {
    const double coefficient = q_pochhammer(q_minus_n_, q, k) / q_pochhammer(q, q, k);
    const cplx start = q_power(q, cplx(0.0, ik_sign * k)) * e_a;
    sum += coefficient * q_pochhammer(start, cplx(q), n_) * ratio_power;
    ratio_power *= ratio;
  }
  return k_sum_scale_ * sum;
}

cplx CompassWigner::explicit_component(DirectionPair pair, double p, double x) const {
  const double q = params_.q();
  const int n = n_;
  const PhaseArgument arg = make_phase_argument(p, x, params_);
  const cplx a = arg.a;
  const cplx ac = arg.a_conj;
  const double m = params_.mass();
  const double w = params_.omega();
  const double log_base = std::log(prefactor_) -
                          2.0 / (params_.hbar() * w) * (m * w * w * x * x / 2.0 + p * p / (2.0 * m));
  const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
  const double log_q_binom2 = -0.5 * n * (n - 1) * std::log(q);
  const double qn = std::pow(q, n);

  switch (code(pair)) {
    case code('N', 'N'):
      return sign_n * std::exp(log_base + log_q_binom2) *
             phi32(n, qn * std::exp(-kI * a), qn * std::exp(kI * ac), q);
    case code('N', 'S'):
      return std::exp(log_base + kI * static_cast<double>(n) * a) *
             phi32(n, q * std::exp(-kI * a), std::exp(kI * ac), q);
    case code('E', 'E'):
      return sign_n * std::exp(log_base + log_q_binom2) * phi32(n, qn * std::exp(a), qn * std::exp(ac), q);
    case code('E', 'W'):
      return std::exp(log_base - static_cast<double>(n) * a) * phi32(n, q * std::exp(a), std::exp(ac), q);
    case code('N', 'E'): return std::exp(log_base) * k_sum(+1, +1, +1, arg);
    case code('N', 'W'): return std::exp(log_base) * k_sum(-1, -1, +1, arg);
    case code('S', 'E'): return std::exp(log_base) * k_sum(-1, +1, -1, arg);
    case code('S', 'W'): return std::exp(log_base) * k_sum(+1, -1, -1, arg);
    default: break;
  }
  throw InvalidArgument("explicit_component: " + pair.name() + " has no closed form");
}

cplx CompassWigner::component(DirectionPair pair, double p, double x) const {
  if (pair.is_explicit()) {
    return explicit_component(pair, p, x);
  }
  switch (code(pair)) {
    // Point reflections.
    case code('S', 'S'): return explicit_component(pair_of('N', 'N'), -p, -x);
    case code('S', 'N'): return explicit_component(pair_of('N', 'S'), -p, -x);
    case code('W', 'W'): return explicit_component(pair_of('E', 'E'), -p, -x);
    case code('W', 'E'): return explicit_component(pair_of('E', 'W'), -p, -x);
    // EN, WN, ES, WS are conjugates of their transposes.
    default: return std::conj(explicit_component({pair.second, pair.first}, p, x));
  }
}

WignerSample CompassWigner::sample(double p, double x) const {
  cplx sum{0.0};
  double scale = 0.0;
  for (const DirectionPair& pair : all_direction_pairs()) {
    const int turns = phase_quarter_turns(pair.second, n_) - phase_quarter_turns(pair.first, n_);
    const cplx phased = quarter_turn(turns) * component(pair, p, x);
    sum += phased;
    scale = std::max(scale, std::abs(phased));
  }
  return {sum.real(), std::abs(sum.imag()), scale};
}

double CompassWigner::total(double p, double x) const {
  const WignerSample s = sample(p, x);
  if (s.imag_residue > kRealnessGate * s.component_scale) {
    throw ConsistencyError("wigner total: imaginary residue " + std::to_string(s.imag_residue) + " at (p, x) = (" +
                           std::to_string(p) + ", " + std::to_string(x) + ") exceeds 1e-9 of component scale");
  }
  return s.value;
}

double CompassWigner::diagonal(double p, double x) const {
  double sum = 0.0;
  for (Direction d : kDirections) {
    sum += component({d, d}, p, x).real();
  }
  return sum;
}

cplx component_closed(DirectionPair pair, int n, double p, double x, const OscillatorParams& params) {
  return CompassWigner(n, params).component(pair, p, x);
}

double total(int n, double p, double x, const OscillatorParams& params) {
  return CompassWigner(n, params).total(p, x);
}

cplx cross_wigner_oracle(const AnalyticState& a, const AnalyticState& b, double p, double x,
                         const OscillatorParams& params, const QuadratureSpec& quad) {
  const double hbar = params.hbar();
  const auto result = integrate_uniform(quad, [&](double y) {
    return std::conj(a(x - y / 2.0)) * b(x + y / 2.0) * std::exp(-kI * p * y / hbar);
  });
  return result.value / (2.0 * std::numbers::pi * hbar);
}

}  // namespace qcompass

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>

#include "qcompass/errors.hpp"

namespace qcompass {

class OscillatorParams;

/// Uniform composite rule on [-half_width, half_width]. Nodes sit at j * step
/// for |j| <= floor(half_width / step); for Gaussian-damped analytic
/// integrands this trapezoid sum converges spectrally.
struct QuadratureSpec {
  double half_width = 0.0;
  double step = 0.0;

  void validate() const;
  long half_count() const { return static_cast<long>(std::floor(half_width / step)); }
};

QuadratureSpec make_quadrature(double half_width, double step);

/// Window over x covering every compass component of quantum number n, with
/// step = half_width / 512.
QuadratureSpec position_quadrature(int n, const OscillatorParams& params);

/// Window over the Wigner integration variable at position x. The arguments
/// x -/+ x'/2 then cover the support of every component.
QuadratureSpec wigner_quadrature(int n, const OscillatorParams& params, double x);

/// Relative size of the integrand at the window edge above which the
/// window is rejected.
inline constexpr double kQuadratureTailTolerance = 1e-14;

template <typename R>
struct QuadratureResult {
  R value{};
  /// max(|f(-L)|, |f(L)|) / max_j |f(x_j)|
  double tail_ratio = 0.0;
};

/// step * sum_j f(x_j) with Neumaier compensation. Throws
/// QuadratureWindowError when the tail ratio exceeds `tail_tolerance`.
template <typename F>
auto integrate_uniform(const QuadratureSpec& spec, F&& f, double tail_tolerance = kQuadratureTailTolerance)
    -> QuadratureResult<std::invoke_result_t<F&, double>> {
  using R = std::invoke_result_t<F&, double>;
  spec.validate();
  const long count = spec.half_count();
  R sum{};
  R compensation{};
  double peak = 0.0;
  double edge = 0.0;
  const auto neumaier = [](double& s, double& c, double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  };
  for (long j = -count; j <= count; ++j) {
    const R v = f(static_cast<double>(j) * spec.step);
    const double magnitude = std::abs(v);
    peak = std::max(peak, magnitude);
    if (j == -count || j == count) edge = std::max(edge, magnitude);
    if constexpr (std::is_same_v<R, double>) {
      neumaier(sum, compensation, v);
    } else {
      double re = sum.real(), im = sum.imag(), cre = compensation.real(), cim = compensation.imag();
      neumaier(re, cre, v.real());
      neumaier(im, cim, v.imag());
      sum = R(re, im);
      compensation = R(cre, cim);
    }
  }
  QuadratureResult<R> result;
  result.value = (sum + compensation) * spec.step;
  result.tail_ratio = peak > 0.0 ? edge / peak : 0.0;
  if (result.tail_ratio > tail_tolerance) {
    throw QuadratureWindowError("quadrature window [-" + std::to_string(spec.half_width) + ", " +
                                std::to_string(spec.half_width) + "] too small: edge/peak = " +
                                std::to_string(result.tail_ratio));
  }
  return result;
}

}  // namespace qcompass

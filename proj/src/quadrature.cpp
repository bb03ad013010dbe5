#include "qcompass/quadrature.hpp"

#include <cmath>

#include "qcompass/oscillator.hpp"

namespace qcompass {

namespace {

// e^{-lambda r^2} = e^{-40} puts a unit-height Gaussian component well below
// double resolution once squared.
double gaussian_reach(const OscillatorParams& params) { return std::sqrt(40.0 / params.lambda()); }

constexpr double kNodesPerHalfWidth = 512.0;

}  // namespace

void QuadratureSpec::validate() const {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw InvalidArgument("QuadratureSpec: half_width must be positive");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw InvalidArgument("QuadratureSpec: step must be positive");
  }
  if (half_width / step < 64.0) {
    throw InvalidArgument("QuadratureSpec: half_width / step must be at least 64");
  }
}

QuadratureSpec make_quadrature(double half_width, double step) {
  QuadratureSpec spec{half_width, step};
  spec.validate();
  return spec;
}

QuadratureSpec position_quadrature(int n, const OscillatorParams& params) {
  const double half_width = n * params.h() + gaussian_reach(params);
  return make_quadrature(half_width, half_width / kNodesPerHalfWidth);
}

QuadratureSpec wigner_quadrature(int n, const OscillatorParams& params, double x) {
  const double half_width = 2.0 * (std::abs(x) + n * params.h() + gaussian_reach(params));
  return make_quadrature(half_width, half_width / kNodesPerHalfWidth);
}

}  // namespace qcompass

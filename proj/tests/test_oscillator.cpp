#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qcompass/errors.hpp"
#include "qcompass/oscillator.hpp"
#include "qcompass/qkernel.hpp"

using namespace qcompass;

namespace {

const cplx kI{0.0, 1.0};

OscillatorParams unit(double h) { return make_params(1.0, 1.0, 1.0, h); }

double sup_distance(int n, double h) {
  const auto params = unit(h);
  double worst = 0.0;
  for (int j = 0; j <= 200; ++j) {
    const double x = -5.0 + 0.05 * j;
    worst = std::max(worst, std::abs(std::pow(-kI, n) * psi_x(n, x, params) - oracle::ho_unit(n, x)));
  }
  return worst;
}

}  // namespace

TEST_CASE("params derive lambda and q") {
  const auto p = unit(1.3);
  CHECK(p.lambda() == 0.5);
  CHECK(std::round(p.q() * 100.0) / 100.0 == doctest::Approx(0.43));
  CHECK(std::round(unit(2.1).q() * 100.0) / 100.0 == doctest::Approx(0.11));
  double previous = 0.0;
  for (double h : {1.0, 0.1, 0.01, 0.001}) {
    CHECK(unit(h).q() > previous);
    CHECK(unit(h).q() < 1.0);
    previous = unit(h).q();
  }
}

TEST_CASE("params reject nonpositive input") {
  CHECK_THROWS_AS(make_params(1.0, 1.0, 1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(make_params(-1.0, 1.0, 1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(make_params(1.0, 0.0, 1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(make_params(1.0, 1.0, NAN, 1.0), InvalidArgument);
  CHECK_THROWS_WITH_AS(make_params(1.0, 1.0, 1.0, -2.0), doctest::Contains("h > 0"), InvalidArgument);
}

TEST_CASE("norm_const_cn") {
  const double c0 = std::pow(std::numbers::pi, -0.25);
  CHECK(norm_const_cn(0, unit(1.3)) == doctest::Approx(c0).epsilon(1e-15));
  CHECK(norm_const_cn(0, unit(1.3)) == doctest::Approx(0.7511).epsilon(1e-4));
  // Rebuild params so that q = 0.43 exactly: h = sqrt(-ln 0.43 / lambda).
  const auto p = unit(std::sqrt(-std::log(0.43) / 0.5));
  CHECK(norm_const_cn(1, p) == doctest::Approx(c0 * std::sqrt(0.43) / std::sqrt(0.57)).epsilon(1e-12));
  CHECK(norm_const_cn(1, p) == doctest::Approx(0.6525).epsilon(1e-3));
  const double c2 = norm_const_cn(2, unit(0.7));
  CHECK(std::isfinite(c2));
  CHECK(c2 > 0.0);
}

TEST_CASE("ground states are Gaussians") {
  const auto p = unit(1.3);
  for (double x : {-1.5, 0.0, 0.4, 2.0}) {
    const double g = norm_const_cn(0, p) * std::exp(-0.5 * x * x);
    CHECK(std::abs(psi_x(0, x, p) - g) < 1e-15);
    CHECK(std::abs(psi_p_model(0, x, p) - g) < 1e-15);
  }
  CHECK(psi_x(0, 0.0, p).real() == doctest::Approx(0.7511).epsilon(1e-4));
}

TEST_CASE("psi_p_model at the origin for n = 1") {
  const auto p = unit(1.3);
  const double q = p.q();
  // Base 1/q, argument q^0 = 1: 1 - q^{1/2}.
  const cplx v = psi_p_model(1, 0.0, p);
  CHECK(v.real() == doctest::Approx(norm_const_cn(1, p) * (1.0 - std::sqrt(q))).epsilon(1e-13));
  CHECK(std::abs(v.imag()) < 1e-15);
}

TEST_CASE("ho_eigenstate") {
  CHECK(ho_eigenstate(0, 0.0, 0.5) == doctest::Approx(0.7511).epsilon(1e-4));
  CHECK(ho_eigenstate(1, 0.0, 0.5) == 0.0);
  CHECK(ho_eigenstate(1, 0.0, 2.3) == 0.0);
  for (int n = 0; n <= 4; ++n) {
    const double norm = oracle::trapezoid([&](double x) { return std::pow(ho_eigenstate(n, x, 0.5), 2); }, 12.0, 2400);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ho_eigenstate(n, 0.8, 0.5) == doctest::Approx(oracle::ho_unit(n, 0.8)).epsilon(1e-12));
  }
}

TEST_CASE("psi_x approaches the oscillator eigenstate as h shrinks") {
  for (int n = 1; n <= 3; ++n) {
    const double d2 = sup_distance(n, 0.2);
    const double d1 = sup_distance(n, 0.1);
    const double d05 = sup_distance(n, 0.05);
    CHECK(d1 < d2);
    CHECK(d05 < d1);
  }
}

TEST_CASE("psi_p_model approaches the oscillator eigenstate as h shrinks") {
  for (int n = 1; n <= 3; ++n) {
    double previous = INFINITY;
    for (double h : {0.2, 0.1, 0.05}) {
      const auto params = unit(h);
      double worst = 0.0;
      for (int j = 0; j <= 100; ++j) {
        const double x = -5.0 + 0.1 * j;
        worst = std::max(worst, std::abs(psi_p_model(n, x, params) - oracle::ho_unit(n, x)));
      }
      CHECK(worst < previous);
      previous = worst;
    }
  }
}

TEST_CASE("ladder operators") {
  for (double h : {0.5, 1.3}) {
    const auto params = unit(h);
    const double q = params.q();
    for (Direction d : kDirections) {
      const auto make = [&](int n) {
        return AnalyticState(
            [=](cplx z) {
              switch (d) {
                case Direction::West: return psi_x(n, z, params);
                case Direction::East: return psi_x(n, z, params, StepSign::reflected);
                case Direction::South: return psi_p_model(n, z, params);
                case Direction::North: return psi_p_model(n, z, params, StepSign::reflected);
              }
              return cplx{};
            },
            "psi");
      };
      for (int n = 0; n <= 3; ++n) {
        const AnalyticState psi = make(n);
        const AnalyticState lowered = ladder_apply(d, LadderSign::lowering, psi, params);
        const AnalyticState number = ladder_apply(d, LadderSign::raising, lowered, params);
        const AnalyticState anti =
            ladder_apply(d, LadderSign::lowering, ladder_apply(d, LadderSign::raising, psi, params), params);
        double scale = 0.0, number_err = 0.0, commutator_err = 0.0, lowered_max = 0.0;
        for (int j = 0; j < 20; ++j) {
          const double x = -3.0 + 6.0 * j / 19.0;
          const cplx v = psi(x);
          scale = std::max(scale, std::abs(v));
          number_err = std::max(number_err, std::abs(number(x) - basic_number(n, q) * v));
          commutator_err = std::max(commutator_err, std::abs(anti(x) - q * number(x) - v));
          lowered_max = std::max(lowered_max, std::abs(lowered(x)));
        }
        CAPTURE(to_char(d));
        CAPTURE(n);
        CAPTURE(h);
        CHECK(number_err / scale < 1e-8);
        CHECK(commutator_err / scale < 1e-8);
        if (n == 0) CHECK(lowered_max / scale < 1e-10);
      }
    }
  }
}

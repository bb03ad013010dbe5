#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "qcompass/errors.hpp"
#include "qcompass/qkernel.hpp"

using namespace qcompass;
using cplx = std::complex<double>;

TEST_CASE("q_pochhammer small cases") {
  CHECK(q_pochhammer(0.7, 0.3, 0) == 1.0);
  CHECK(q_pochhammer(cplx(2.0, -1.0), cplx(0.9), 0) == cplx(1.0));
  CHECK(q_pochhammer(0.5, 0.5, 2) == doctest::Approx(0.375).epsilon(1e-15));

  // a = q^i at q = 0.5, n = 1: 1 - e^{i ln 0.5}.
  const cplx a = q_power(0.5, cplx(0.0, 1.0));
  const cplx v = q_pochhammer(a, cplx(0.5), 1);
  CHECK(v.real() == doctest::Approx(1.0 - std::cos(std::log(0.5))).epsilon(1e-14));
  CHECK(v.imag() == doctest::Approx(-std::sin(std::log(0.5))).epsilon(1e-14));
  CHECK(v.real() == doctest::Approx(0.2308).epsilon(1e-3));
  CHECK(v.imag() == doctest::Approx(0.6390).epsilon(1e-3));
}

TEST_CASE("q_pochhammer rejects bad input") {
  CHECK_THROWS_AS(q_pochhammer(0.5, 0.5, -1), InvalidArgument);
  CHECK_THROWS_AS(q_pochhammer(std::nan(""), 0.5, 2), InvalidArgument);
}

TEST_CASE("q_pochhammer recursion") {
  for (double q : {0.1, 0.5, 0.95}) {
    const cplx a(0.3, 0.8);
    for (int n = 0; n < 12; ++n) {
      const cplx lhs = q_pochhammer(a, cplx(q), n + 1);
      const cplx rhs = q_pochhammer(a, cplx(q), n) * (1.0 - a * std::pow(q, n));
      CHECK(std::abs(lhs - rhs) < 1e-14 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("q_binomial against product expansion") {
  CHECK(q_binomial(5, 0, 0.4) == 1.0);
  CHECK(q_binomial(2, 1, 0.5) == doctest::Approx(1.5));
  CHECK(q_binomial(4, 2, 0.3) == doctest::Approx(oracle::q_binomial_by_expansion(4, 2, 0.3)).epsilon(1e-13));
  for (double q : {0.2, 0.6, 0.9}) {
    for (int n = 0; n <= 8; ++n) {
      for (int k = 0; k <= n; ++k) {
        CHECK(q_binomial(n, k, q) == doctest::Approx(oracle::q_binomial_by_expansion(n, k, q)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("rogers_szego hand values") {
  CHECK(rogers_szego<double>(0, cplx(3.0, 2.0), cplx(0.4)) == cplx(1.0));
  const cplx v = rogers_szego<double>(1, cplx(1.0), cplx(0.25));
  CHECK(v.real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(v.imag() == 0.0);
}

TEST_CASE("rogers_szego against q-binomial form and three-term recurrence") {
  // H_n(-arg; q) = sum_k [n k]_q (-1)^k q^{-k/2} arg^k = standard H_n(-arg q^{-1/2}; q).
  for (double q : {0.4, 0.11, 0.9}) {
    for (int n = 0; n <= 8; ++n) {
      for (cplx arg : {cplx(0.7, 0.2), cplx(-1.1, 0.5), cplx(0.0, 1.3), cplx(2.0, 0.0)}) {
        cplx binomial{0.0};
        for (int k = 0; k <= n; ++k) {
          binomial += oracle::q_binomial_by_expansion(n, k, q) * std::pow(-1.0, k) * std::pow(q, -0.5 * k) *
                      std::pow(arg, k);
        }
        const cplx recurrence = oracle::rogers_szego_standard(n, -arg / std::sqrt(q), cplx(q));
        const cplx literal = rogers_szego<double>(n, arg, cplx(q));
        const double scale = std::max(1.0, std::abs(binomial));
        CHECK(std::abs(literal - binomial) < 1e-10 * scale);
        CHECK(std::abs(literal - recurrence) < 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("rogers_szego with base above one") {
  const double q = 0.43;
  const cplx base(1.0 / q);
  for (int n = 0; n <= 6; ++n) {
    const cplx arg = std::pow(q, n - 1) * std::exp(cplx(-0.6, 0.0));
    const cplx recurrence = oracle::rogers_szego_standard(n, -arg / std::sqrt(base), base);
    const cplx literal = rogers_szego<double>(n, arg, base);
    CHECK(std::abs(literal - recurrence) < 1e-10 * std::max(1.0, std::abs(recurrence)));
  }
}

TEST_CASE("rogers_szego_scaled keeps huge values representable") {
  const auto big = rogers_szego_scaled<double>(6, cplx(1e60, 0.0), cplx(0.5));
  CHECK(std::isfinite(big.log_scale));
  CHECK(big.log_scale > 300.0);
  const auto small = rogers_szego_scaled<double>(3, cplx(0.3, 0.1), cplx(0.5));
  CHECK(std::abs(small.value() - rogers_szego<double>(3, cplx(0.3, 0.1), cplx(0.5))) < 1e-14);
}

TEST_CASE("phi32_terminating") {
  const double q = 0.5;
  const cplx a1(0.25), a2(0.25), b1(q), b2(0.0), z(q);
  CHECK(phi32_terminating<double>(0, a1, a2, b1, b2, q, z) == cplx(1.0));

  const cplx g1(0.3, 0.1), g2(-0.2, 0.4), c1(0.6, -0.1), c2(0.2, 0.2), w(0.7, 0.3);
  const cplx two_term = 1.0 + (1.0 - 1.0 / 0.8) * (1.0 - g1) * (1.0 - g2) / ((1.0 - c1) * (1.0 - c2) * (1.0 - 0.8)) * w;
  CHECK(std::abs(phi32_terminating<double>(1, g1, g2, c1, c2, 0.8, w) - two_term) < 1e-14);

  cplx direct{0.0};
  for (int k = 0; k <= 2; ++k) {
    cplx num{1.0}, den{1.0};
    for (int j = 0; j < k; ++j) {
      num *= (1.0 - std::pow(q, -2) * std::pow(q, j)) * (1.0 - a1 * std::pow(q, j)) * (1.0 - a2 * std::pow(q, j));
      den *= (1.0 - b1 * std::pow(q, j)) * (1.0 - b2 * std::pow(q, j)) * (1.0 - std::pow(q, j + 1));
    }
    direct += num / den * std::pow(z, k);
  }
  CHECK(std::abs(phi32_terminating<double>(2, a1, a2, b1, b2, q, z) - direct) < 1e-13);
}

TEST_CASE("phi32_terminating flags a vanishing denominator") {
  CHECK_THROWS_AS(phi32_terminating<double>(2, cplx(0.2), cplx(0.3), cplx(1.0), cplx(0.0), 0.5, cplx(0.5)),
                  DegenerateParameter);
}

TEST_CASE("basic_number") {
  CHECK(basic_number(0, 0.3) == 0.0);
  CHECK(basic_number(2, 0.5) == doctest::Approx(1.5));
  CHECK(basic_number(3, 0.999) == doctest::Approx(3.0).epsilon(5e-3));
  for (double q : {0.91, 0.99}) {
    for (int n = 1; n <= 3; ++n) CHECK(std::abs(basic_number(n, q) - n) < n * (1.0 - q));
    for (int n = 1; n <= 10; ++n) CHECK(std::abs(basic_number(n, q) - n) <= 0.5 * n * (n - 1) * (1.0 - q) + 1e-14);
  }
}

TEST_CASE("hermite") {
  CHECK(hermite(0, 0.37) == 1.0);
  CHECK(hermite(2, 1.0) == doctest::Approx(2.0));
  CHECK(hermite(5, 0.7) == doctest::Approx(oracle::hermite_recurrence(5, 0.7)).epsilon(1e-12));
  for (int n = 0; n <= 12; ++n) {
    for (double x : {-3.0, -0.4, 0.0, 1.1, 2.5}) {
      const double r = oracle::hermite_recurrence(n, x);
      CHECK(std::abs(hermite(n, x) - r) < 1e-10 * std::max(1.0, std::abs(r)));
    }
  }
}

#pragma once

// Reference implementations used only by the tests. None of them call into
// the library's numerical kernels.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Coefficients of prod_{j<n} (1 + q^j t); coefficient k is q^{k(k-1)/2} [n k]_q.
inline std::vector<double> gauss_product_coefficients(int n, double q) {
  std::vector<double> c{1.0};
  for (int j = 0; j < n; ++j) {
    const double w = std::pow(q, j);
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] += w * c[k];
    }
    c = next;
  }
  return c;
}

inline double q_binomial_by_expansion(int n, int k, double q) {
  return gauss_product_coefficients(n, q)[static_cast<std::size_t>(k)] / std::pow(q, 0.5 * k * (k - 1));
}

/// Standard Rogers-Szego polynomial sum_k [n k]_q y^k from its three-term
/// recurrence H_{k+1} = (1 + y) H_k - y (1 - q^k) H_{k-1}.
inline cplx rogers_szego_standard(int n, cplx y, cplx q) {
  cplx previous{1.0};
  if (n == 0) return previous;
  cplx current = 1.0 + y;
  for (int k = 1; k < n; ++k) {
    const cplx next = (1.0 + y) * current - y * (1.0 - std::pow(q, k)) * previous;
    previous = current;
    current = next;
  }
  return current;
}

inline double hermite_recurrence(int n, double x) {
  double a = 1.0;
  if (n == 0) return a;
  double b = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * x * b - 2.0 * k * a;
    a = b;
    b = c;
  }
  return b;
}

inline double laguerre(int n, double x) {
  double a = 1.0;
  if (n == 0) return a;
  double b = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double c = ((2.0 * k + 1.0 - x) * b - k * a) / (k + 1.0);
    a = b;
    b = c;
  }
  return b;
}

/// Oscillator eigenfunction with m = omega = hbar = 1.
inline double ho_unit(int n, double x) {
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  return std::pow(std::numbers::pi, -0.25) / std::sqrt(std::pow(2.0, n) * factorial) * hermite_recurrence(n, x) *
         std::exp(-0.5 * x * x);
}

/// Wigner function of the n-th oscillator eigenstate, m = omega = hbar = 1.
inline double ho_wigner_unit(int n, double p, double x) {
  const double r2 = x * x + p * p;
  return ((n % 2 == 0) ? 1.0 : -1.0) / std::numbers::pi * std::exp(-r2) * laguerre(n, 2.0 * r2);
}

/// Plain trapezoid over [-L, L] with `count` intervals.
template <typename F>
auto trapezoid(F&& f, double half_width, int count) {
  const double step = 2.0 * half_width / count;
  auto sum = 0.5 * (f(-half_width) + f(half_width));
  for (int j = 1; j < count; ++j) sum += f(-half_width + j * step);
  return sum * step;
}

/// (1 / 2 pi) int conj(a(x - y/2)) b(x + y/2) e^{-i p y} dy with hbar = 1.
inline cplx cross_wigner(const std::function<cplx(double)>& a, const std::function<cplx(double)>& b, double p,
                         double x, double half_width, int count) {
  const cplx i{0.0, 1.0};
  return trapezoid([&](double y) { return std::conj(a(x - y / 2.0)) * b(x + y / 2.0) * std::exp(-i * p * y); },
                   half_width, count) /
         (2.0 * std::numbers::pi);
}

}  // namespace oracle

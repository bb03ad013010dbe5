#pragma once

// q-special functions: q-shifted factorials, Rogers-Szego polynomials,
// terminating 3phi2 series, basic numbers and Hermite polynomials.
//
// Every function is a literal formula evaluator templated on the real scalar
// type. No caching, no compensation for cancellation near q -> 1; callers own
// the accuracy budget.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <string>
#include <vector>

#include "qcompass/errors.hpp"

namespace qcompass {

namespace detail {

template <std::floating_point T>
bool is_finite(const std::complex<T>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <std::floating_point T>
bool is_finite(T v) {
  return std::isfinite(v);
}

}  // namespace detail

/// Complex value carried as mantissa * exp(log_scale), used where a literal
/// sum would overflow before the final Gaussian factor is applied.
template <std::floating_point T>
struct ScaledComplex {
  std::complex<T> mantissa{1};
  T log_scale{0};

  std::complex<T> value() const { return mantissa * std::exp(log_scale); }
};

/// base^exponent on the principal branch with ln(base) real, e.g. q^{ik}.
template <std::floating_point T>
std::complex<T> q_power(T base, const std::complex<T>& exponent) {
  if (!(base > T(0))) {
    throw InvalidArgument("q_power: base must be positive");
  }
  return std::exp(exponent * std::log(base));
}

/// (a; base)_n = prod_{k=0}^{n-1} (1 - a base^k), with (a; base)_0 = 1.
template <std::floating_point T>
std::complex<T> q_pochhammer(const std::complex<T>& a, const std::complex<T>& base, int n) {
  if (n < 0) {
    throw InvalidArgument("q_pochhammer: n must be nonnegative");
  }
  if (!detail::is_finite(a) || !detail::is_finite(base)) {
    throw InvalidArgument("q_pochhammer: non-finite argument");
  }
  std::complex<T> product{1};
  std::complex<T> power{1};
  for (int k = 0; k < n; ++k) {
    product *= T(1) - a * power;
    power *= base;
  }
  return product;
}

template <std::floating_point T>
T q_pochhammer(T a, T base, int n) {
  if (n < 0) {
    throw InvalidArgument("q_pochhammer: n must be nonnegative");
  }
  if (!std::isfinite(a) || !std::isfinite(base)) {
    throw InvalidArgument("q_pochhammer: non-finite argument");
  }
  T product{1};
  T power{1};
  for (int k = 0; k < n; ++k) {
    product *= T(1) - a * power;
    power *= base;
  }
  return product;
}

/// Gaussian binomial coefficient [n k]_q for 0 < q < 1.
template <std::floating_point T>
T q_binomial(int n, int k, T q) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidArgument("q_binomial: need 0 <= k <= n");
  }
  if (!(q > T(0) && q < T(1))) {
    throw InvalidArgument("q_binomial: q must lie in (0, 1)");
  }
  return q_pochhammer(q, q, n) / (q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k));
}

/// Rogers-Szego polynomial H_n(-arg; base), evaluated as the literal sum
///
///   sum_{k=0}^{n} (base^{-n}; base)_k / (base; base)_k * base^{nk - k^2/2} * arg^k
///
/// Bases with modulus above one (the p-representation uses base 1/q) go
/// through the same substitution. When any term's log-magnitude exceeds
/// `log_threshold` the sum is accumulated relative to the largest term and
/// returned as mantissa * exp(log_scale); otherwise log_scale is zero.
template <std::floating_point T>
ScaledComplex<T> rogers_szego_scaled(int n, const std::complex<T>& arg, const std::complex<T>& base,
                                     T log_threshold = T(300)) {
  if (n < 0) {
    throw InvalidArgument("rogers_szego: n must be nonnegative");
  }
  if (!detail::is_finite(arg) || !detail::is_finite(base) || base == std::complex<T>(0)) {
    throw InvalidArgument("rogers_szego: argument and base must be finite, base nonzero");
  }
  for (int j = 1; j <= n; ++j) {
    if (std::pow(base, T(j)) == std::complex<T>(1)) {
      throw DegenerateParameter("rogers_szego: (base; base)_k vanishes at k = " + std::to_string(j));
    }
  }
  if (n == 0 || arg == std::complex<T>(0)) {
    return {std::complex<T>(1), T(0)};
  }

  const std::complex<T> log_base = std::log(base);
  const std::complex<T> log_arg = std::log(arg);

  std::vector<std::complex<T>> log_terms(static_cast<std::size_t>(n) + 1);
  std::complex<T> log_coefficient{0};
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      log_coefficient += std::log(T(1) - std::pow(base, T(k - 1 - n))) - std::log(T(1) - std::pow(base, T(k)));
    }
    const T exponent = T(n) * T(k) - T(k) * T(k) / T(2);
    log_terms[static_cast<std::size_t>(k)] = log_coefficient + exponent * log_base + T(k) * log_arg;
  }
  const T largest = std::max_element(log_terms.begin(), log_terms.end(), [](const auto& a, const auto& b) {
                      return a.real() < b.real();
                    })->real();

  if (largest > log_threshold) {
    std::complex<T> mantissa{0};
    for (const auto& lt : log_terms) {
      mantissa += std::exp(lt - largest);
    }
    return {mantissa, largest};
  }

  const std::complex<T> base_to_minus_n = std::pow(base, T(-n));
  std::complex<T> sum{0};
  std::complex<T> arg_power{1};
  for (int k = 0; k <= n; ++k) {
    const T exponent = T(n) * T(k) - T(k) * T(k) / T(2);
    sum += q_pochhammer(base_to_minus_n, base, k) / q_pochhammer(base, base, k) * std::pow(base, exponent) *
           arg_power;
    arg_power *= arg;
  }
  return {sum, T(0)};
}

template <std::floating_point T>
std::complex<T> rogers_szego(int n, const std::complex<T>& arg, const std::complex<T>& base) {
  const std::complex<T> v = rogers_szego_scaled(n, arg, base).value();
  if (!detail::is_finite(v)) {
    throw DegenerateParameter("rogers_szego: value overflows; use rogers_szego_scaled");
  }
  return v;
}

/// Terminating basic hypergeometric series
///
///   3phi2(q^{-n}, a1, a2; b1, b2; q, z) = sum_{k=0}^{n} (q^{-n}, a1, a2; q)_k / (b1, b2, q; q)_k z^k
///
/// b2 = 0 is allowed ((0; q)_k = 1).
template <std::floating_point T>
std::complex<T> phi32_terminating(int n, const std::complex<T>& a1, const std::complex<T>& a2,
                                  const std::complex<T>& b1, const std::complex<T>& b2, T q,
                                  const std::complex<T>& z) {
  if (n < 0) {
    throw InvalidArgument("phi32_terminating: n must be nonnegative");
  }
  if (!(q > T(0) && q < T(1))) {
    throw InvalidArgument("phi32_terminating: q must lie in (0, 1)");
  }
  const T q_minus_n = std::pow(q, T(-n));
  std::complex<T> term{1};
  std::complex<T> sum{1};
  T qk{1};
  for (int k = 0; k < n; ++k) {
    const std::complex<T> denominator = (T(1) - b1 * qk) * (T(1) - b2 * qk) * (T(1) - qk * q);
    if (denominator == std::complex<T>(0)) {
      throw DegenerateParameter("phi32_terminating: vanishing lower parameter factor at k = " +
                                std::to_string(k + 1));
    }
    term *= (T(1) - q_minus_n * qk) * (T(1) - a1 * qk) * (T(1) - a2 * qk) / denominator * z;
    sum += term;
    qk *= q;
  }
  return sum;
}

/// [n]_q = (1 - q^n) / (1 - q).
template <std::floating_point T>
T basic_number(int n, T q) {
  if (n < 0) {
    throw InvalidArgument("basic_number: n must be nonnegative");
  }
  if (!(q > T(0) && q < T(1))) {
    throw InvalidArgument("basic_number: q must lie in (0, 1)");
  }
  return (T(1) - std::pow(q, T(n))) / (T(1) - q);
}

/// Physicists' Hermite polynomial from the finite sum
/// H_n(x) = n! sum_{k <= n/2} (-1)^k (2x)^{n-2k} / (k! (n-2k)!).
template <std::floating_point T>
T hermite(int n, T x) {
  if (n < 0) {
    throw InvalidArgument("hermite: n must be nonnegative");
  }
  const auto factorial = [](int m) {
    T f{1};
    for (int i = 2; i <= m; ++i) f *= T(i);
    return f;
  };
  const T n_factorial = factorial(n);
  T sum{0};
  for (int k = 0; 2 * k <= n; ++k) {
    const T sign = (k % 2 == 0) ? T(1) : T(-1);
    sum += sign * std::pow(T(2) * x, T(n - 2 * k)) / (factorial(k) * factorial(n - 2 * k));
  }
  return n_factorial * sum;
}

}  // namespace qcompass

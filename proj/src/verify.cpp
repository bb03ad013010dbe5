#include "qcompass/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "qcompass/compass.hpp"
#include "qcompass/oscillator.hpp"
#include "qcompass/phasespace.hpp"
#include "qcompass/qkernel.hpp"
#include "qcompass/wigner.hpp"

namespace qcompass {

namespace {

constexpr cplx kI{0.0, 1.0};

struct Worst {
  double value = 0.0;
  void update(double r) { value = std::max(value, std::isfinite(r) ? r : INFINITY); }
};

PropertyResult below(std::string name, double residual, double tolerance, std::string detail = {}) {
  return {std::move(name), residual < tolerance, residual, tolerance, std::move(detail)};
}

PropertyResult holds(std::string name, bool ok, double residual, std::string detail) {
  return {std::move(name), ok, residual, 0.0, std::move(detail)};
}

OscillatorParams unit_params(double h) { return make_params(1.0, 1.0, 1.0, h); }

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (count - 1);
  return v;
}

// q-binomial reformulation: H_n(-arg; q) = sum_k [n k]_q (-1)^k q^{-k/2} arg^k.
cplx rogers_szego_binomial_route(int n, cplx arg, double q) {
  cplx sum{0.0};
  cplx power{1.0};
  for (int k = 0; k <= n; ++k) {
    sum += q_binomial(n, k, q) * ((k % 2 == 0) ? 1.0 : -1.0) * std::pow(q, -0.5 * k) * power;
    power *= arg;
  }
  return sum;
}

double hermite_recurrence(int n, double x) {
  double previous = 1.0;
  if (n == 0) return previous;
  double current = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * current - 2.0 * k * previous;
    previous = current;
    current = next;
  }
  return current;
}

PropertyResult kernel_pochhammer_recursion() {
  Worst worst;
  for (double q : {0.1, 0.43, 0.9}) {
    for (cplx a : {cplx(0.5, 0.0), cplx(0.3, -0.7), cplx(-1.2, 0.4)}) {
      for (int n = 0; n < 10; ++n) {
        const cplx lhs = q_pochhammer(a, cplx(q), n + 1);
        const cplx rhs = q_pochhammer(a, cplx(q), n) * (1.0 - a * std::pow(q, n));
        worst.update(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
    }
  }
  return below("kernel.q_pochhammer_recursion", worst.value, 1e-14);
}

PropertyResult kernel_rogers_szego() {
  Worst worst;
  for (double q : {0.1, 0.43, 0.9}) {
    for (int n = 0; n <= 8; ++n) {
      for (int j = 0; j < 8; ++j) {
        const cplx arg = std::polar(1.3, 2.0 * std::numbers::pi * j / 8.0 + 0.3);
        const cplx literal = rogers_szego<double>(n, arg, cplx(q));
        const cplx binomial = rogers_szego_binomial_route(n, arg, q);
        worst.update(std::abs(literal - binomial) / std::abs(binomial));
      }
    }
  }
  return below("kernel.rogers_szego_vs_q_binomial", worst.value, 1e-10);
}

PropertyResult kernel_hermite() {
  Worst worst;
  for (int n = 0; n <= 10; ++n) {
    for (double x : linspace(-5.0, 5.0, 41)) {
      const double r = hermite_recurrence(n, x);
      worst.update(std::abs(hermite(n, x) - r) / std::max(1.0, std::abs(r)));
    }
  }
  return below("kernel.hermite_sum_vs_recurrence", worst.value, 1e-10);
}

PropertyResult kernel_phi32() {
  Worst worst;
  const cplx a1(0.25, 0.1), a2(0.3, -0.2), b1(0.5, 0.0);
  for (double q : {0.3, 0.5, 0.8}) {
    for (int n = 0; n <= 6; ++n) {
      cplx direct{0.0};
      double magnitude = 0.0;
      for (int k = 0; k <= n; ++k) {
        const cplx numerator = q_pochhammer(cplx(std::pow(q, -n)), cplx(q), k) * q_pochhammer(a1, cplx(q), k) *
                               q_pochhammer(a2, cplx(q), k);
        const cplx denominator = q_pochhammer(b1, cplx(q), k) * q_pochhammer(cplx(q), cplx(q), k);
        const cplx term = numerator / denominator * std::pow(cplx(q), k);
        direct += term;
        magnitude += std::abs(term);
      }
      const cplx series = phi32_terminating<double>(n, a1, a2, b1, cplx(0.0), q, cplx(q));
      // Alternating terms cancel; compare against the term magnitudes.
      worst.update(std::abs(series - direct) / std::max(1.0, magnitude));
    }
  }
  return below("kernel.phi32_vs_direct_loop", worst.value, 1e-10);
}

PropertyResult kernel_basic_number() {
  // |[n]_q - n| = sum_{j<n} (1 - q^j) <= n (n - 1) / 2 * (1 - q).
  bool ok = true;
  double worst = 0.0;
  for (double q : {0.91, 0.95, 0.99, 0.999}) {
    for (int n = 1; n <= 10; ++n) {
      const double gap = std::abs(basic_number(n, q) - n);
      const double bound = 0.5 * n * (n - 1) * (1.0 - q);
      ok = ok && gap <= bound * (1.0 + 1e-9);
      if (n <= 3) ok = ok && gap < n * (1.0 - q);
      if (bound > 0.0) worst = std::max(worst, gap / bound);
    }
  }
  return holds("kernel.basic_number_limit", ok, worst, "max |[n]_q - n| / (n(n-1)/2 (1-q))");
}

PropertyResult oscillator_unit_norm() {
  Worst worst;
  for (double h : {0.5, 1.3, 2.1}) {
    const auto params = unit_params(h);
    for (int n = 0; n <= 4; ++n) {
      const auto quad = position_quadrature(n, params);
      for (Direction d : kDirections) {
        const double norm = integrate_uniform(quad, [&](double x) { return std::norm(component(d, n, x, params)); }).value;
        worst.update(std::abs(norm - 1.0));
      }
    }
  }
  return below("oscillator.component_unit_norm", worst.value, 1e-8);
}

double sup_distance_to_ho(int n, double h) {
  const auto params = unit_params(h);
  const cplx phase = std::pow(-kI, n);
  double worst = 0.0;
  for (double x : linspace(-5.0, 5.0, 201)) {
    worst = std::max(worst, std::abs(phase * psi_x(n, x, params) - ho_eigenstate(n, x, params.lambda())));
  }
  return worst;
}

PropertyResult oscillator_ho_limit() {
  bool ok = true;
  std::ostringstream detail;
  double last_distance = 0.0;
  for (int n = 1; n <= 3; ++n) {
    double previous = INFINITY;
    for (double h : {0.2, 0.1, 0.05}) {
      const double d = sup_distance_to_ho(n, h);
      ok = ok && d < previous;
      previous = d;
    }
    last_distance = std::max(last_distance, previous);
  }
  detail << "sup distance at h=0.05 <= " << last_distance;
  return holds("oscillator.ho_limit_monotone", ok, last_distance, detail.str());
}

template <typename Residual>
double ladder_residual(Residual&& residual) {
  double worst = 0.0;
  for (double h : {0.5, 1.3}) {
    const auto params = unit_params(h);
    for (Direction d : kDirections) {
      for (int n = 0; n <= 3; ++n) {
        const AnalyticState psi = component_state(d, n, params);
        const AnalyticState lowered = ladder_apply(d, LadderSign::lowering, psi, params);
        const AnalyticState number = ladder_apply(d, LadderSign::raising, lowered, params);
        const AnalyticState anti =
            ladder_apply(d, LadderSign::lowering, ladder_apply(d, LadderSign::raising, psi, params), params);
        double scale = 0.0;
        double err = 0.0;
        for (double x : linspace(-3.0, 3.0, 20)) {
          scale = std::max(scale, std::abs(psi(x)));
          err = std::max(err, residual(psi, number, anti, params, n, x));
        }
        worst = std::max(worst, err / scale);
      }
    }
  }
  return worst;
}

PropertyResult oscillator_number_operator() {
  const double r = ladder_residual([](const AnalyticState& psi, const AnalyticState& number, const AnalyticState&,
                                      const OscillatorParams& params, int n, double x) {
    return std::abs(number(x) - basic_number(n, params.q()) * psi(x));
  });
  return below("oscillator.ladder_number_operator", r, 1e-8);
}

PropertyResult oscillator_q_commutator() {
  const double r = ladder_residual([](const AnalyticState& psi, const AnalyticState& number, const AnalyticState& anti,
                                      const OscillatorParams& params, int, double x) {
    return std::abs(anti(x) - params.q() * number(x) - psi(x));
  });
  return below("oscillator.ladder_q_commutator", r, 1e-8);
}

PropertyResult oscillator_east_wiring() {
  Worst worst;
  const auto params = unit_params(1.3);
  for (int n = 0; n <= 3; ++n) {
    for (double x : linspace(-4.0, 4.0, 17)) {
      worst.update(std::abs(psi_x(n, x, params, StepSign::reflected) - component(Direction::East, n, x, params)));
      worst.update(std::abs(std::conj(component(Direction::West, n, x, params)) - component(Direction::East, n, x, params)));
    }
  }
  return below("oscillator.east_is_reflected_west", worst.value, 1e-14);
}

PropertyResult compass_ground_collapse() {
  Worst worst;
  for (double h : {0.5, 1.3, 2.1, 5.0}) {
    const auto params = unit_params(h);
    const CompassState state({0, params});
    for (double x : linspace(-5.0, 5.0, 101)) {
      worst.update(std::abs(state(x) - norm_const_cn(0, params) * std::exp(-params.lambda() * x * x)));
    }
  }
  return below("compass.ground_collapse", worst.value, 1e-12);
}

PropertyResult compass_normalization(std::ostream* log, bool verbose) {
  Worst worst;
  for (double h : {0.5, 1.3, 2.1}) {
    const auto params = unit_params(h);
    for (int n = 0; n <= 3; ++n) {
      const NormalizationCheck c = check_normalization(n, params);
      worst.update(c.relative_difference);
      if (verbose && log) {
        *log << "  N_q h=" << format_double(h) << " n=" << n << " analytic=" << format_double(c.analytic)
             << " numeric=" << format_double(c.numeric) << " rel_diff=" << format_double(c.relative_difference)
             << " imag_braces_rel=" << format_double(c.braces_imag_relative) << '\n';
      }
    }
  }
  return below("compass.normalization_analytic_vs_numeric", worst.value, 1e-6);
}

PropertyResult compass_orthonormality() {
  const auto params = unit_params(1.3);
  std::vector<CompassState> states;
  for (int n = 0; n <= 3; ++n) states.emplace_back(CompassSpec{n, params});
  const auto quad = position_quadrature(3, params);
  Eigen::Matrix4cd gram;
  for (int m = 0; m <= 3; ++m) {
    for (int n = m; n <= 3; ++n) {
      gram(m, n) = integrate_uniform(quad, [&](double x) { return std::conj(states[m](x)) * states[n](x); }).value;
      gram(n, m) = std::conj(gram(m, n));
    }
  }
  const Eigen::Matrix4cd deviation = gram - Eigen::Matrix4cd::Identity();
  const double diagonal = deviation.diagonal().cwiseAbs().maxCoeff();
  const double off_diagonal = (deviation - Eigen::Matrix4cd(deviation.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
  std::ostringstream detail;
  detail << "on-diagonal " << format_double(diagonal) << " (< 1e-8)";
  return {"compass.orthonormality", diagonal < 1e-8 && off_diagonal < 1e-7, off_diagonal, 1e-7, detail.str()};
}

PropertyResult compass_phase_exactness() {
  bool ok = true;
  for (Direction d : kDirections) {
    for (int n = 0; n < 12; ++n) {
      const cplx p = phase_factor(d, n);
      ok = ok && (p * p * p * p == cplx(1.0, 0.0));
    }
    ok = ok && phase_factor(Direction::South, 7) == cplx(1.0, 0.0);
  }
  return holds("compass.phase_exactness", ok, 0.0, "fourth powers equal 1 exactly");
}

PropertyResult compass_ho_overlap() {
  bool ok = true;
  double worst_gap = 0.0;
  for (int n = 1; n <= 3; ++n) {
    double previous = -1.0;
    for (double h : {0.2, 0.1, 0.05}) {
      const auto params = unit_params(h);
      const CompassState state({n, params});
      const double overlap = std::abs(integrate_uniform(position_quadrature(n, params), [&](double x) {
                                        return ho_eigenstate(n, x, params.lambda()) * state(x);
                                      }).value);
      ok = ok && overlap > previous;
      previous = overlap;
    }
    ok = ok && previous > 0.99;
    worst_gap = std::max(worst_gap, 1.0 - previous);
  }
  return holds("compass.ho_overlap_limit", ok, worst_gap, "overlap increases along h = 0.2, 0.1, 0.05 and exceeds 0.99");
}

PropertyResult wigner_oracle(const VerifyOptions& options) {
  Worst worst;
  const auto params = unit_params(1.3);
  for (int n = 0; n <= 2; ++n) {
    const CompassWigner wigner(n, params, {options.wigner_prefactor_scale});
    const AnalyticState psi = CompassState({n, params}).as_state();
    for (double p : linspace(-4.0, 4.0, 5)) {
      for (double x : linspace(-4.0, 4.0, 5)) {
        const cplx oracle = cross_wigner_oracle(psi, psi, p, x, params, wigner_quadrature(n, params, x));
        worst.update(std::abs(wigner.total(p, x) - oracle.real()));
      }
    }
  }
  return below("wigner.oracle_equivalence", worst.value, 1e-6);
}

PropertyResult wigner_realness() {
  Worst worst;
  for (double h : {0.5, 1.3, 2.1}) {
    const auto params = unit_params(h);
    for (int n = 0; n <= 2; ++n) {
      const CompassWigner wigner(n, params);
      for (double p : linspace(-4.0, 4.0, 9)) {
        for (double x : linspace(-4.0, 4.0, 9)) {
          const WignerSample s = wigner.sample(p, x);
          worst.update(s.component_scale > 0.0 ? s.imag_residue / s.component_scale : 0.0);
        }
      }
    }
  }
  return below("wigner.realness", worst.value, 1e-9);
}

PropertyResult wigner_normalization(const VerifyOptions& options) {
  const auto params = unit_params(1.3);
  const CompassWigner wigner(1, params, {options.wigner_prefactor_scale});
  const double step = 0.1;
  double sum = 0.0;
  for (double p : linspace(-8.0, 8.0, 161)) {
    for (double x : linspace(-8.0, 8.0, 161)) sum += wigner.total(p, x);
  }
  return below("wigner.normalization", std::abs(sum * step * step - 1.0), 1e-3);
}

PropertyResult wigner_marginal(const VerifyOptions& options) {
  const auto params = unit_params(1.3);
  const CompassWigner wigner(1, params, {options.wigner_prefactor_scale});
  const CompassState state({1, params});
  Worst worst;
  const double step = 0.05;
  for (double x : linspace(-3.0, 3.0, 7)) {
    double sum = 0.0;
    for (double p : linspace(-12.0, 12.0, 481)) sum += wigner.total(p, x);
    worst.update(std::abs(sum * step - std::norm(state(x))));
  }
  return below("wigner.marginal", worst.value, 1e-5);
}

PropertyResult wigner_ground_origin(const VerifyOptions& options) {
  Worst worst;
  for (double h : {0.5, 1.3, 2.1, 5.0}) {
    worst.update(std::abs(CompassWigner(0, unit_params(h), {options.wigner_prefactor_scale}).total(0.0, 0.0) -
                          1.0 / std::numbers::pi));
  }
  return below("wigner.ground_origin", worst.value, 1e-10);
}

std::string describe(const PeakList& peaks) {
  std::ostringstream out;
  for (const Peak& pk : peaks.peaks) {
    out << " (p=" << format_double(pk.p) << ", x=" << format_double(pk.x) << ", W=" << format_double(pk.value)
        << ", r=" << format_double(std::hypot(pk.p, pk.x)) << ")";
  }
  return out.str();
}

PropertyResult phasespace_peaks(std::ostream* log) {
  const auto params = unit_params(5.0);
  const GridSpec spec{-8.0, 8.0, -8.0, 8.0, 161, 161};
  const PeakList lobes = locate_peaks(render_lobe_grid(1, params, spec), 4);
  double worst = 0.0;
  for (const Peak& pk : lobes.peaks) worst = std::max(worst, std::abs(std::hypot(pk.p, pk.x) - 5.0) / 5.0);
  const bool ok = !lobes.short_list && lobes.peaks.size() == 4 && worst <= 0.1;
  if (log) {
    const PeakList panel = locate_peaks(render_grid(1, params, spec), 4);
    *log << "INFO phasespace.panel_top4_abs_peaks h=5 n=1:" << describe(panel) << '\n';
  }
  return holds("phasespace.lobe_peak_distance", ok, worst, "diagonal-term lobes:" + describe(lobes));
}

PropertyResult phasespace_negativity() {
  const GridSpec spec{-4.0, 4.0, -4.0, 4.0, 81, 81};
  const double excited = negativity_fraction(render_grid(1, unit_params(2.1), spec), 0.01);
  const double ground = negativity_fraction(render_grid(0, unit_params(2.1), spec), 1e-6);
  std::ostringstream detail;
  detail << "n=1,h=2.1: " << format_double(excited) << "; n=0: " << format_double(ground);
  return holds("phasespace.negativity", excited > 0.0 && ground == 0.0, excited, detail.str());
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const VerifyOptions& options, std::ostream* log) {
  const std::vector<std::pair<std::string, std::function<PropertyResult()>>> properties{
      {"kernel.q_pochhammer_recursion", kernel_pochhammer_recursion},
      {"kernel.rogers_szego_vs_q_binomial", kernel_rogers_szego},
      {"kernel.hermite_sum_vs_recurrence", kernel_hermite},
      {"kernel.phi32_vs_direct_loop", kernel_phi32},
      {"kernel.basic_number_limit", kernel_basic_number},
      {"oscillator.component_unit_norm", oscillator_unit_norm},
      {"oscillator.ho_limit_monotone", oscillator_ho_limit},
      {"oscillator.ladder_number_operator", oscillator_number_operator},
      {"oscillator.ladder_q_commutator", oscillator_q_commutator},
      {"oscillator.east_is_reflected_west", oscillator_east_wiring},
      {"compass.ground_collapse", compass_ground_collapse},
      {"compass.normalization_analytic_vs_numeric", [&] { return compass_normalization(log, options.verbose); }},
      {"compass.orthonormality", compass_orthonormality},
      {"compass.phase_exactness", compass_phase_exactness},
      {"compass.ho_overlap_limit", compass_ho_overlap},
      {"wigner.oracle_equivalence", [&] { return wigner_oracle(options); }},
      {"wigner.realness", wigner_realness},
      {"wigner.normalization", [&] { return wigner_normalization(options); }},
      {"wigner.marginal", [&] { return wigner_marginal(options); }},
      {"wigner.ground_origin", [&] { return wigner_ground_origin(options); }},
      {"phasespace.lobe_peak_distance", [&] { return phasespace_peaks(log); }},
      {"phasespace.negativity", phasespace_negativity},
  };
  std::vector<PropertyResult> results;
  for (const auto& [name, property] : properties) {
    try {
      results.push_back(property());
    } catch (const std::exception& e) {
      results.push_back({name, false, INFINITY, 0.0, std::string("exception: ") + e.what()});
    }
  }
  return results;
}

}  // namespace qcompass

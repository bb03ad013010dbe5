#include "qcompass/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "qcompass/compass.hpp"
#include "qcompass/errors.hpp"
#include "qcompass/oscillator.hpp"
#include "qcompass/qkernel.hpp"
#include "qcompass/verify.hpp"

namespace qcompass {

namespace {

OscillatorParams params_of(const RunConfig& c) { return make_params(c.mass, c.omega, c.hbar, c.h); }

std::string fmt(double v) { return format_double(v); }

std::string short_number(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%g", v);
  return buffer;
}

std::string extension(GridFormat format) { return format == GridFormat::csv ? ".csv" : ".pgm"; }

void add_physics(CLI::App& sub, RunConfig& c) {
  sub.add_option("--n", c.n, "quantum number")->check(CLI::NonNegativeNumber);
  sub.add_option("--mass", c.mass, "mass m");
  sub.add_option("--omega", c.omega, "frequency omega");
  sub.add_option("--hbar", c.hbar, "reduced Planck constant");
  sub.add_option("--h", c.h, "deformation step, h > 0");
  sub.add_flag("--verbose", c.verbose);
}

void add_grid(CLI::App& sub, RunConfig& c) {
  sub.add_option("--pmin", c.grid.p_min);
  sub.add_option("--pmax", c.grid.p_max);
  sub.add_option("--xmin", c.grid.x_min);
  sub.add_option("--xmax", c.grid.x_max);
  sub.add_option("--np", c.grid.n_p, "nodes along p");
  sub.add_option("--nx", c.grid.n_x, "nodes along x");
}

void add_output(CLI::App& sub, RunConfig& c) {
  const std::map<std::string, GridFormat> formats{{"csv", GridFormat::csv}, {"pgm", GridFormat::pgm}};
  sub.add_option("--format", c.format, "csv or pgm")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub.add_option("--out", c.out, "output path");
  sub.add_option("--workers", c.workers, "render threads")->check(CLI::PositiveNumber);
}

void add_quadrature(CLI::App& sub, double& half_width, double& step) {
  auto* hw = sub.add_option("--quad-halfwidth", half_width, "quadrature half width");
  auto* st = sub.add_option("--quad-step", step, "quadrature step");
  hw->needs(st);
  st->needs(hw);
}

// Everything a subcommand needs must be valid before it starts.
void validate(const RunConfig& c) {
  if (!(c.h > 0.0)) throw InvalidArgument("--h: deformation step must satisfy h > 0, got " + fmt(c.h));
  params_of(c);
  c.grid.validate();
  if (c.quadrature) c.quadrature->validate();
  if (c.panel_nodes && *c.panel_nodes < 3) throw InvalidArgument("--np: figure panels need at least 3 nodes");
  if (c.subcommand == Subcommand::eval) {
    direction_from_char(c.direction);
    if (c.pair != "NS" && c.pair != "EW") throw InvalidArgument("--pair must be NS or EW, got " + c.pair);
  }
}

void write_header(std::ostream& out, const RunConfig& c, const OscillatorParams& params) {
  out << "# n = " << c.n << '\n'
      << "# m = " << fmt(params.mass()) << '\n'
      << "# omega = " << fmt(params.omega()) << '\n'
      << "# hbar = " << fmt(params.hbar()) << '\n'
      << "# h = " << fmt(params.h()) << '\n'
      << "# q = " << fmt(params.q()) << '\n';
}

std::string describe_peaks(const PeakList& list) {
  std::ostringstream s;
  for (const Peak& pk : list.peaks) {
    s << "  p = " << fmt(pk.p) << ", x = " << fmt(pk.x) << ", W = " << fmt(pk.value)
      << ", distance = " << fmt(std::hypot(pk.p, pk.x)) << '\n';
  }
  if (list.short_list) s << "  (short list: fewer maxima than requested)\n";
  return s.str();
}

}  // namespace

int cmd_params(const RunConfig& c, std::ostream& out) {
  const auto params = params_of(c);
  out << "lambda = " << fmt(params.lambda()) << '\n' << "q = " << fmt(params.q()) << '\n';
  for (int k = 0; k <= c.n; ++k) {
    out << "[" << k << "]_q = " << fmt(basic_number(k, params.q())) << '\n';
  }
  return exit_code::ok;
}

int cmd_eval(const RunConfig& c, std::ostream& out) {
  const auto params = params_of(c);
  const QuadratureSpec quad = c.quadrature.value_or(position_quadrature(c.n, params));

  const auto evaluated = [&]() -> std::pair<AnalyticState, std::string> {
    switch (c.what) {
      case EvalTarget::compass: {
        const auto mode = c.normalization == "numeric" ? NormalizationMode::numeric : NormalizationMode::analytic;
        return {CompassState(CompassSpec{c.n, params, mode}).as_state(), "compass"};
      }
      case EvalTarget::cat:
        return {CatState(c.pair == "EW" ? CatPair::EW : CatPair::NS, c.n, params, quad).as_state(), "cat " + c.pair};
      case EvalTarget::component:
        break;
    }
    return {component_state(direction_from_char(c.direction), c.n, params), std::string("component ") + c.direction};
  }();
  const AnalyticState& state = evaluated.first;
  const std::string& label = evaluated.second;

  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) throw IoError("eval: cannot open " + c.out + " for writing");
  }
  std::ostream& sink = c.out.empty() ? out : file;

  sink << "# " << label << '\n';
  write_header(sink, c, params);
  sink << "x,re,im\n";
  std::vector<double> xs;
  if (c.x) {
    xs.push_back(*c.x);
  } else {
    for (int j = 0; j < c.grid.n_x; ++j) xs.push_back(c.grid.x_node(j));
  }
  for (double x : xs) {
    const cplx v = state(x);
    sink << fmt(x) << ',' << fmt(v.real()) << ',' << fmt(v.imag()) << '\n';
  }

  if (c.what == EvalTarget::cat) {
    const double norm = integrate_uniform(quad, [&](double x) { return std::norm(state(x)); }).value;
    sink << "# norm = " << fmt(norm) << (std::abs(norm - 1.0) < 1e-8 ? " (unit)" : " (NOT unit)") << '\n';
  }
  if (c.what == EvalTarget::compass && c.n == 0) {
    double lo = INFINITY, hi = -INFINITY;
    for (double x : xs) {
      const double g = ho_eigenstate(0, x, params.lambda());
      if (g < 1e-300) continue;
      const double r = std::abs(state(x)) / g;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    sink << "# ratio |Psi| / ground Gaussian: min = " << fmt(lo) << ", max = " << fmt(hi) << '\n';
  }
  if (!c.out.empty()) {
    file.close();
    if (!file) throw IoError("eval: write failed for " + c.out);
    out << "wrote " << c.out << '\n';
  }
  return exit_code::ok;
}

int cmd_render(const RunConfig& c, std::ostream& out) {
  const auto params = params_of(c);
  const std::string path = c.out.empty() ? "wigner" + extension(c.format) : c.out;
  const PhaseSpaceGrid grid = render_grid(c.n, params, c.grid, c.workers);
  export_grid(grid, c.format, path);
  out << "wrote " << path << '\n';
  if (c.format == GridFormat::pgm) out << "wrote " << sidecar_path(path).string() << '\n';
  return exit_code::ok;
}

int cmd_figure1(const RunConfig& c, std::ostream& out) {
  const std::filesystem::path dir = c.out.empty() ? "figure1" : c.out;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("figure1: cannot create " + dir.string() + ": " + ec.message());

  std::ostringstream summary;
  summary << "# n = 1, m = " << fmt(c.mass) << ", omega = " << fmt(c.omega) << ", hbar = " << fmt(c.hbar) << '\n';
  for (double h : kFigureSteps) {
    const auto params = make_params(c.mass, c.omega, c.hbar, h);
    const GridSpec spec = figure_panel_spec(h, c.panel_nodes.value_or(301));
    const PhaseSpaceGrid grid = render_grid(1, params, spec, c.workers);
    const std::filesystem::path path = dir / ("panel_h" + short_number(h) + extension(c.format));
    export_grid(grid, c.format, path);
    out << "wrote " << path.string() << '\n';

    summary << "\n[panel h = " << short_number(h) << "]\n"
            << "q = " << fmt(params.q()) << '\n'
            << "grid = [" << fmt(spec.p_min) << ", " << fmt(spec.p_max) << "] x [" << fmt(spec.x_min) << ", "
            << fmt(spec.x_max) << "], " << spec.n_p << " x " << spec.n_x << '\n'
            << "W_min = " << fmt(grid.values.minCoeff()) << ", W_max = " << fmt(grid.values.maxCoeff()) << '\n'
            << "negativity_fraction(0.01) = " << fmt(negativity_fraction(grid, 0.01)) << '\n'
            << "sign_alternations(p = 0, |x| <= 3) = " << central_sign_alternations(grid, 3.0) << '\n'
            << "top 4 |W| peaks:\n"
            << describe_peaks(locate_peaks(grid, 4))
            << "top 4 peaks of the diagonal terms (NN + SS + EE + WW):\n"
            << describe_peaks(locate_peaks(render_lobe_grid(1, params, spec, c.workers), 4));
  }

  const auto control_params = make_params(c.mass, c.omega, c.hbar, 1.3);
  const PhaseSpaceGrid control = render_grid(0, control_params, figure_panel_spec(1.3, 101), c.workers);
  summary << "\n[control n = 0, h = 1.3]\n"
          << "negativity_fraction(1e-06) = " << fmt(negativity_fraction(control, 1e-6)) << '\n';

  const std::filesystem::path summary_path = dir / "summary.txt";
  std::ofstream file(summary_path);
  if (!file) throw IoError("figure1: cannot open " + summary_path.string() + " for writing");
  file << summary.str();
  file.close();
  if (!file) throw IoError("figure1: write failed for " + summary_path.string());
  out << "wrote " << summary_path.string() << '\n';
  return exit_code::ok;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  VerifyOptions options;
  options.verbose = c.verbose;
  options.wigner_prefactor_scale = c.perturb_prefactor;
  const auto results = run_property_suite(options, &out);
  int failed = 0;
  for (const auto& r : results) {
    out << "PROPERTY " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " residual=" << fmt(r.residual);
    if (r.tolerance > 0.0) out << " tolerance=" << fmt(r.tolerance);
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << '\n';
    if (!r.pass) ++failed;
  }
  out << "SUMMARY " << results.size() - failed << "/" << results.size() << " properties pass\n";
  return failed == 0 ? exit_code::ok : exit_code::verification;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"q-deformed oscillator compass states and their Wigner functions", "qcompass"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  double quad_half_width = 0.0;
  double quad_step = 0.0;

  auto* params = app.add_subcommand("params", "print lambda, q and [k]_q for k <= n");
  add_physics(*params, c);

  auto* eval = app.add_subcommand("eval", "tabulate a wavefunction along x");
  add_physics(*eval, c);
  add_grid(*eval, c);
  add_quadrature(*eval, quad_half_width, quad_step);
  eval->add_option("--out", c.out, "CSV output path (default: standard output)");
  const std::map<std::string, EvalTarget> targets{
      {"component", EvalTarget::component}, {"compass", EvalTarget::compass}, {"cat", EvalTarget::cat}};
  eval->add_option("--what", c.what, "component, compass or cat")->transform(CLI::CheckedTransformer(targets));
  eval->add_option("--direction", c.direction, "N, S, E or W");
  eval->add_option("--pair", c.pair, "NS or EW");
  eval->add_option("--x", c.x, "single evaluation point");
  eval->add_option("--normalization", c.normalization, "analytic or numeric")
      ->check(CLI::IsMember({"analytic", "numeric"}));

  auto* render = app.add_subcommand("render", "render one Wigner grid");
  add_physics(*render, c);
  add_grid(*render, c);
  add_output(*render, c);

  auto* figure = app.add_subcommand("figure1", "render the six n = 1 panels and a summary");
  figure->add_option("--mass", c.mass, "mass m");
  figure->add_option("--omega", c.omega, "frequency omega");
  figure->add_option("--hbar", c.hbar, "reduced Planck constant");
  figure->add_option("--np", c.panel_nodes, "nodes per panel axis (default 301)");
  add_output(*figure, c);
  figure->add_flag("--verbose", c.verbose);

  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_flag("--verbose", c.verbose);
  verify->add_option("--perturb-prefactor", c.perturb_prefactor)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  if (*params) c.subcommand = Subcommand::params;
  if (*eval) c.subcommand = Subcommand::eval;
  if (*render) c.subcommand = Subcommand::render;
  if (*figure) c.subcommand = Subcommand::figure1;
  if (*verify) c.subcommand = Subcommand::verify;
  if (eval->count("--quad-halfwidth") > 0) c.quadrature = QuadratureSpec{quad_half_width, quad_step};

  try {
    validate(c);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }

  try {
    switch (c.subcommand) {
      case Subcommand::params: return cmd_params(c, out);
      case Subcommand::eval: return cmd_eval(c, out);
      case Subcommand::render: return cmd_render(c, out);
      case Subcommand::figure1: return cmd_figure1(c, out);
      case Subcommand::verify: return cmd_verify(c, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::runtime;
  }
  return exit_code::runtime;
}

}  // namespace qcompass

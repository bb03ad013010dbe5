#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcompass/phasespace.hpp"
#include "qcompass/quadrature.hpp"

namespace qcompass {

enum class Subcommand { params, eval, render, figure1, verify };

enum class EvalTarget { component, compass, cat };

/// Parsed command line. Physical defaults m = omega = hbar = 1, h = 1.3.
struct RunConfig {
  Subcommand subcommand = Subcommand::params;
  int n = 1;
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double h = 1.3;
  GridSpec grid;
  std::optional<int> panel_nodes;
  GridFormat format = GridFormat::pgm;
  std::string out;
  std::optional<QuadratureSpec> quadrature;
  bool verbose = false;
  int workers = 1;

  EvalTarget what = EvalTarget::component;
  char direction = 'W';
  std::string pair = "NS";
  std::optional<double> x;
  std::string normalization = "analytic";

  double perturb_prefactor = 1.0;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int runtime = 1;
inline constexpr int usage = 2;
inline constexpr int verification = 3;
}  // namespace exit_code

/// Parses `args` (without the program name) and runs the subcommand.
/// Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_params(const RunConfig& config, std::ostream& out);
int cmd_eval(const RunConfig& config, std::ostream& out);
int cmd_render(const RunConfig& config, std::ostream& out);
int cmd_figure1(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);

}  // namespace qcompass

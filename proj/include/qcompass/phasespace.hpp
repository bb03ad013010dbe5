#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcompass/oscillator.hpp"

namespace qcompass {

/// Uniform (p, x) lattice. Rows index p, columns index x.
struct GridSpec {
  double p_min = -4.0;
  double p_max = 4.0;
  double x_min = -4.0;
  double x_max = 4.0;
  int n_p = 101;
  int n_x = 101;

  void validate() const;
  double p_node(int i) const { return p_min + (p_max - p_min) * i / (n_p - 1); }
  double x_node(int j) const { return x_min + (x_max - x_min) * j / (n_x - 1); }
};

using GridValues = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct GridMeta {
  int n = 0;
  OscillatorParams params{1.0, 1.0, 1.0, 1.0};
  std::chrono::system_clock::time_point generated_at{};
};

struct PhaseSpaceGrid {
  GridSpec spec;
  GridValues values;
  GridMeta meta;
};

/// Closed-form Wigner function on every lattice node. Rows are split across
/// `workers` threads; the result does not depend on the split. A failing
/// point aborts the render with its coordinates in the message.
PhaseSpaceGrid render_grid(int n, const OscillatorParams& params, const GridSpec& spec, int workers = 1);

/// Only the four diagonal terms W^{NN} + W^{SS} + W^{EE} + W^{WW}.
PhaseSpaceGrid render_lobe_grid(int n, const OscillatorParams& params, const GridSpec& spec, int workers = 1);

/// Default panel lattice: 301 x 301 over [-4, 4]^2 for h <= 2.1, else [-8, 8]^2.
GridSpec figure_panel_spec(double h, int nodes = 301);

/// Deformation steps of the six n = 1 figure panels.
inline constexpr double kFigureSteps[6] = {0.0001, 1.3, 2.1, 2.5, 3.3, 5.0};

struct Peak {
  double p = 0.0;
  double x = 0.0;
  double value = 0.0;
  int row = 0;
  int col = 0;
};

struct PeakList {
  std::vector<Peak> peaks;
  /// Fewer local maxima survived suppression than were requested.
  bool short_list = false;
};

/// Largest local maxima of |values| (each >= its 8 neighbours), thinned by
/// greedy suppression within 3 nodes and sorted by |value| descending.
PeakList locate_peaks(const PhaseSpaceGrid& grid, int count);

/// Fraction of nodes with value < -threshold * max|values|.
double negativity_fraction(const PhaseSpaceGrid& grid, double threshold);

/// Sign changes along the row nearest p = 0 restricted to |x| <= half_width.
/// Nodes with |value| <= 1e-6 of the row maximum are skipped.
int central_sign_alternations(const PhaseSpaceGrid& grid, double half_width);

enum class GridFormat { csv, pgm };

/// CSV: '#'-prefixed "key = value" header lines, then n_p rows of n_x values
/// at 17 significant digits. PGM: binary P5, 16-bit big-endian, linear map
/// of [W_min, W_max] to [0, 65535], plus a "key = value" sidecar with the
/// same basename and suffix ".meta".
void export_grid(const PhaseSpaceGrid& grid, GridFormat format, const std::filesystem::path& destination);

std::filesystem::path sidecar_path(const std::filesystem::path& pgm);

/// Reads back a CSV export. Values are bit-identical to the exported ones.
PhaseSpaceGrid import_csv(const std::filesystem::path& source);

/// Reads back a PGM export through its sidecar; values carry the 16-bit
/// quantization error (W_max - W_min) / 65535 / 2 at most.
PhaseSpaceGrid import_pgm(const std::filesystem::path& source);

std::string format_double(double v);

}  // namespace qcompass

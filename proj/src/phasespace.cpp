#include "qcompass/phasespace.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "qcompass/errors.hpp"
#include "qcompass/wigner.hpp"

namespace qcompass {

namespace {

using PointFn = std::function<double(double, double)>;

PhaseSpaceGrid render_with(int n, const OscillatorParams& params, const GridSpec& spec, int workers,
                           const PointFn& point) {
  spec.validate();
  PhaseSpaceGrid grid{spec, GridValues(spec.n_p, spec.n_x), GridMeta{n, params, std::chrono::system_clock::now()}};
  const int thread_count = std::clamp(workers, 1, spec.n_p);

  std::atomic<bool> abort{false};
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(thread_count));
  const auto run_rows = [&](int worker) {
    for (int i = worker; i < spec.n_p && !abort.load(std::memory_order_relaxed); i += thread_count) {
      const double p = spec.p_node(i);
      for (int j = 0; j < spec.n_x; ++j) {
        const double x = spec.x_node(j);
        try {
          grid.values(i, j) = point(p, x);
        } catch (const std::exception& e) {
          failures[static_cast<std::size_t>(worker)] = std::make_exception_ptr(
              Error("render_grid: failed at (p, x) = (" + format_double(p) + ", " + format_double(x) + "): " + e.what()));
          abort = true;
          return;
        }
      }
    }
  };

  if (thread_count == 1) {
    run_rows(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(static_cast<std::size_t>(thread_count));
    for (int w = 0; w < thread_count; ++w) threads.emplace_back(run_rows, w);
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return grid;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::map<std::string, std::string> parse_key_values(std::istream& in, bool comment_prefixed,
                                                    std::vector<std::string>* data_lines = nullptr) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    std::string body = line;
    if (comment_prefixed) {
      if (line.empty() || line[0] != '#') {
        if (data_lines && !trim(line).empty()) data_lines->push_back(line);
        continue;
      }
      body = line.substr(1);
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) continue;
    kv[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
  }
  return kv;
}

const std::string& require_key(const std::map<std::string, std::string>& kv, const std::string& key,
                               const std::filesystem::path& source) {
  const auto it = kv.find(key);
  if (it == kv.end()) {
    throw IoError(source.string() + ": missing header key '" + key + "'");
  }
  return it->second;
}

double parse_double(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

std::vector<std::pair<std::string, std::string>> header_fields(const PhaseSpaceGrid& grid) {
  const auto& params = grid.meta.params;
  const auto& spec = grid.spec;
  return {
      {"n", std::to_string(grid.meta.n)},
      {"m", format_double(params.mass())},
      {"omega", format_double(params.omega())},
      {"hbar", format_double(params.hbar())},
      {"h", format_double(params.h())},
      {"q", format_double(params.q())},
      {"p_min", format_double(spec.p_min)},
      {"p_max", format_double(spec.p_max)},
      {"x_min", format_double(spec.x_min)},
      {"x_max", format_double(spec.x_max)},
      {"n_p", std::to_string(spec.n_p)},
      {"n_x", std::to_string(spec.n_x)},
  };
}

PhaseSpaceGrid grid_from_header(const std::map<std::string, std::string>& kv, const std::filesystem::path& source) {
  PhaseSpaceGrid grid;
  grid.spec.p_min = parse_double(require_key(kv, "p_min", source));
  grid.spec.p_max = parse_double(require_key(kv, "p_max", source));
  grid.spec.x_min = parse_double(require_key(kv, "x_min", source));
  grid.spec.x_max = parse_double(require_key(kv, "x_max", source));
  grid.spec.n_p = std::stoi(require_key(kv, "n_p", source));
  grid.spec.n_x = std::stoi(require_key(kv, "n_x", source));
  grid.spec.validate();
  grid.meta.n = std::stoi(require_key(kv, "n", source));
  grid.meta.params = make_params(parse_double(require_key(kv, "m", source)),
                                 parse_double(require_key(kv, "omega", source)),
                                 parse_double(require_key(kv, "hbar", source)),
                                 parse_double(require_key(kv, "h", source)));
  grid.values = GridValues(grid.spec.n_p, grid.spec.n_x);
  return grid;
}

void write_csv(const PhaseSpaceGrid& grid, const std::filesystem::path& destination) {
  std::ofstream out(destination);
  if (!out) throw IoError("export_grid: cannot open " + destination.string() + " for writing");
  for (const auto& [key, value] : header_fields(grid)) {
    out << "# " << key << " = " << value << '\n';
  }
  for (int i = 0; i < grid.values.rows(); ++i) {
    for (int j = 0; j < grid.values.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(grid.values(i, j));
    }
    out << '\n';
  }
  if (!out) throw IoError("export_grid: write failed for " + destination.string());
}

void write_pgm(const PhaseSpaceGrid& grid, const std::filesystem::path& destination) {
  const double w_min = grid.values.minCoeff();
  const double w_max = grid.values.maxCoeff();
  const bool constant = !(w_max > w_min);

  std::ofstream out(destination, std::ios::binary);
  if (!out) throw IoError("export_grid: cannot open " + destination.string() + " for writing");
  out << "P5\n" << grid.spec.n_x << ' ' << grid.spec.n_p << "\n65535\n";
  for (int i = 0; i < grid.values.rows(); ++i) {
    for (int j = 0; j < grid.values.cols(); ++j) {
      const double level = constant ? 0.0 : std::round((grid.values(i, j) - w_min) / (w_max - w_min) * 65535.0);
      const auto pixel = static_cast<std::uint16_t>(std::clamp(level, 0.0, 65535.0));
      const char bytes[2] = {static_cast<char>(pixel >> 8), static_cast<char>(pixel & 0xff)};
      out.write(bytes, 2);
    }
  }
  if (!out) throw IoError("export_grid: write failed for " + destination.string());

  const auto meta_path = sidecar_path(destination);
  std::ofstream meta(meta_path);
  if (!meta) throw IoError("export_grid: cannot open " + meta_path.string() + " for writing");
  meta << "format = pgm\n";
  meta << "W_min = " << format_double(w_min) << '\n';
  meta << "W_max = " << format_double(w_max) << '\n';
  meta << "constant_grid = " << (constant ? "true" : "false") << '\n';
  meta << "row_order = p ascending\n";
  for (const auto& [key, value] : header_fields(grid)) {
    meta << key << " = " << value << '\n';
  }
  if (!meta) throw IoError("export_grid: write failed for " + meta_path.string());
}

}  // namespace

void GridSpec::validate() const {
  if (!(p_max > p_min)) throw InvalidArgument("GridSpec: need p_max > p_min");
  if (!(x_max > x_min)) throw InvalidArgument("GridSpec: need x_max > x_min");
  if (n_p < 2 || n_x < 2) throw InvalidArgument("GridSpec: need at least 2 nodes per axis");
}

std::string format_double(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

PhaseSpaceGrid render_grid(int n, const OscillatorParams& params, const GridSpec& spec, int workers) {
  const CompassWigner wigner(n, params);
  return render_with(n, params, spec, workers, [&](double p, double x) { return wigner.total(p, x); });
}

PhaseSpaceGrid render_lobe_grid(int n, const OscillatorParams& params, const GridSpec& spec, int workers) {
  const CompassWigner wigner(n, params);
  return render_with(n, params, spec, workers, [&](double p, double x) { return wigner.diagonal(p, x); });
}

GridSpec figure_panel_spec(double h, int nodes) {
  const double half = h <= 2.1 ? 4.0 : 8.0;
  return GridSpec{-half, half, -half, half, nodes, nodes};
}

PeakList locate_peaks(const PhaseSpaceGrid& grid, int count) {
  if (count < 1) throw InvalidArgument("locate_peaks: count must be at least 1");
  const auto& v = grid.values;
  const int rows = static_cast<int>(v.rows());
  const int cols = static_cast<int>(v.cols());

  std::vector<Peak> candidates;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double here = std::abs(v(i, j));
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          const int r = i + di;
          const int c = j + dj;
          if ((di == 0 && dj == 0) || r < 0 || c < 0 || r >= rows || c >= cols) continue;
          if (std::abs(v(r, c)) > here) {
            is_max = false;
            break;
          }
        }
      }
      if (is_max) candidates.push_back({grid.spec.p_node(i), grid.spec.x_node(j), v(i, j), i, j});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Peak& a, const Peak& b) { return std::abs(a.value) > std::abs(b.value); });

  constexpr int kSuppressionRadius = 3;
  PeakList result;
  for (const Peak& c : candidates) {
    const bool suppressed = std::any_of(result.peaks.begin(), result.peaks.end(), [&](const Peak& kept) {
      return std::abs(kept.row - c.row) <= kSuppressionRadius && std::abs(kept.col - c.col) <= kSuppressionRadius;
    });
    if (suppressed) continue;
    result.peaks.push_back(c);
    if (static_cast<int>(result.peaks.size()) == count) break;
  }
  result.short_list = static_cast<int>(result.peaks.size()) < count;
  return result;
}

double negativity_fraction(const PhaseSpaceGrid& grid, double threshold) {
  if (threshold < 0.0) throw InvalidArgument("negativity_fraction: threshold must be nonnegative");
  const double scale = grid.values.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) return 0.0;
  const auto negatives = (grid.values.array() < -threshold * scale).count();
  return static_cast<double>(negatives) / static_cast<double>(grid.values.size());
}

int central_sign_alternations(const PhaseSpaceGrid& grid, double half_width) {
  int row = 0;
  double best = std::abs(grid.spec.p_node(0));
  for (int i = 1; i < grid.spec.n_p; ++i) {
    if (std::abs(grid.spec.p_node(i)) < best) {
      best = std::abs(grid.spec.p_node(i));
      row = i;
    }
  }
  const auto line = grid.values.row(row);
  const double scale = line.cwiseAbs().maxCoeff();
  int changes = 0;
  int previous = 0;
  for (int j = 0; j < grid.spec.n_x; ++j) {
    if (std::abs(grid.spec.x_node(j)) > half_width) continue;
    const double v = line(j);
    if (std::abs(v) <= 1e-6 * scale) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (previous != 0 && sign != previous) ++changes;
    previous = sign;
  }
  return changes;
}

std::filesystem::path sidecar_path(const std::filesystem::path& pgm) {
  auto meta = pgm;
  meta.replace_extension(".meta");
  return meta;
}

void export_grid(const PhaseSpaceGrid& grid, GridFormat format, const std::filesystem::path& destination) {
  if (grid.values.rows() != grid.spec.n_p || grid.values.cols() != grid.spec.n_x) {
    throw InvalidArgument("export_grid: values do not match the grid spec");
  }
  if (!grid.values.allFinite()) {
    throw InvalidArgument("export_grid: grid contains non-finite values");
  }
  if (format == GridFormat::csv) {
    write_csv(grid, destination);
  } else {
    write_pgm(grid, destination);
  }
}

PhaseSpaceGrid import_csv(const std::filesystem::path& source) {
  std::ifstream in(source);
  if (!in) throw IoError("import_csv: cannot open " + source.string());
  std::vector<std::string> rows;
  const auto kv = parse_key_values(in, true, &rows);
  PhaseSpaceGrid grid = grid_from_header(kv, source);
  if (static_cast<int>(rows.size()) != grid.spec.n_p) {
    throw IoError("import_csv: " + source.string() + " has " + std::to_string(rows.size()) + " rows, expected " +
                  std::to_string(grid.spec.n_p));
  }
  for (int i = 0; i < grid.spec.n_p; ++i) {
    std::stringstream line(rows[static_cast<std::size_t>(i)]);
    std::string cell;
    int j = 0;
    while (std::getline(line, cell, ',')) {
      if (j >= grid.spec.n_x) throw IoError("import_csv: too many columns in row " + std::to_string(i));
      grid.values(i, j++) = parse_double(cell);
    }
    if (j != grid.spec.n_x) throw IoError("import_csv: too few columns in row " + std::to_string(i));
  }
  return grid;
}

PhaseSpaceGrid import_pgm(const std::filesystem::path& source) {
  const auto meta_path = sidecar_path(source);
  std::ifstream meta(meta_path);
  if (!meta) throw IoError("import_pgm: cannot open sidecar " + meta_path.string());
  const auto kv = parse_key_values(meta, false);
  PhaseSpaceGrid grid = grid_from_header(kv, meta_path);
  const double w_min = parse_double(require_key(kv, "W_min", meta_path));
  const double w_max = parse_double(require_key(kv, "W_max", meta_path));
  const bool constant = require_key(kv, "constant_grid", meta_path) == "true";

  std::ifstream in(source, std::ios::binary);
  if (!in) throw IoError("import_pgm: cannot open " + source.string());
  std::string magic;
  int width = 0, height = 0, maxval = 0;
  in >> magic >> width >> height >> maxval;
  in.get();
  if (magic != "P5" || width != grid.spec.n_x || height != grid.spec.n_p || maxval != 65535) {
    throw IoError("import_pgm: unexpected header in " + source.string());
  }
  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < width; ++j) {
      unsigned char bytes[2];
      if (!in.read(reinterpret_cast<char*>(bytes), 2)) throw IoError("import_pgm: truncated " + source.string());
      const int level = (bytes[0] << 8) | bytes[1];
      grid.values(i, j) = constant ? w_min : w_min + (w_max - w_min) * level / 65535.0;
    }
  }
  return grid;
}

}  // namespace qcompass

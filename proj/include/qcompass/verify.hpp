#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcompass {

struct VerifyOptions {
  bool verbose = false;
  /// Scales the closed-form Wigner prefactor; a negative control for the
  /// oracle-equivalence property.
  double wigner_prefactor_scale = 1.0;
};

struct PropertyResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Runs every library invariant and returns one result per property.
/// Verbose detail and informational lines go to `log` when it is non-null.
std::vector<PropertyResult> run_property_suite(const VerifyOptions& options, std::ostream* log);

}  // namespace qcompass

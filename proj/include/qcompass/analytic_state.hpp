#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>

namespace qcompass {

using cplx = std::complex<double>;

/// A wavefunction that can be evaluated at complex positions.
///
/// States are immutable and cheap to copy; combinators build a lazy tree
/// that is only walked on evaluation. Finite-difference operators need this
/// because they evaluate at x -/+ h, x -/+ h/2 and x -/+ ih/2.
class AnalyticState {
 public:
  using Evaluator = std::function<cplx(cplx)>;

  AnalyticState(Evaluator evaluator, std::string label);

  cplx operator()(cplx z) const { return (*evaluator_)(z); }
  const std::string& label() const { return label_; }

 private:
  std::shared_ptr<const Evaluator> evaluator_;
  std::string label_;
};

/// z -> state(z + offset)
AnalyticState translate(const AnalyticState& state, cplx offset);

/// z -> factor(z) * state(z)
AnalyticState multiply(const AnalyticState& state, AnalyticState::Evaluator factor, const std::string& factor_label);

AnalyticState scale(const AnalyticState& state, cplx factor);
AnalyticState add(const AnalyticState& a, const AnalyticState& b);
AnalyticState subtract(const AnalyticState& a, const AnalyticState& b);

inline AnalyticState operator+(const AnalyticState& a, const AnalyticState& b) { return add(a, b); }
inline AnalyticState operator-(const AnalyticState& a, const AnalyticState& b) { return subtract(a, b); }
inline AnalyticState operator*(cplx c, const AnalyticState& s) { return scale(s, c); }

}  // namespace qcompass

#include "qcompass/analytic_state.hpp"

#include <sstream>
#include <utility>

#include "qcompass/errors.hpp"

namespace qcompass {

AnalyticState::AnalyticState(Evaluator evaluator, std::string label)
    : evaluator_(std::make_shared<const Evaluator>(std::move(evaluator))), label_(std::move(label)) {
  if (!*evaluator_) {
    throw InvalidArgument("AnalyticState: empty evaluator");
  }
}

AnalyticState translate(const AnalyticState& state, cplx offset) {
  std::ostringstream label;
  label << "shift(" << state.label() << ", " << offset << ")";
  return AnalyticState([state, offset](cplx z) { return state(z + offset); }, label.str());
}

AnalyticState multiply(const AnalyticState& state, AnalyticState::Evaluator factor, const std::string& factor_label) {
  return AnalyticState([state, f = std::move(factor)](cplx z) { return f(z) * state(z); },
                       factor_label + "*" + state.label());
}

AnalyticState scale(const AnalyticState& state, cplx factor) {
  std::ostringstream label;
  label << factor << "*" << state.label();
  return AnalyticState([state, factor](cplx z) { return factor * state(z); }, label.str());
}

AnalyticState add(const AnalyticState& a, const AnalyticState& b) {
  return AnalyticState([a, b](cplx z) { return a(z) + b(z); }, "(" + a.label() + " + " + b.label() + ")");
}

AnalyticState subtract(const AnalyticState& a, const AnalyticState& b) {
  return AnalyticState([a, b](cplx z) { return a(z) - b(z); }, "(" + a.label() + " - " + b.label() + ")");
}

}  // namespace qcompass

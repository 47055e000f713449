#include "csswg/error.hpp"

#include <sstream>

namespace csswg {

namespace {

std::string overflow_message(double ratio, double threshold) {
  std::ostringstream os;
  os << "domain overflow: boundary amplitude is " << ratio
     << " of peak (threshold " << threshold << ")";
  return os.str();
}

std::string instability_message(double t) {
  std::ostringstream os;
  os << "numerical instability: non-finite values at t = " << t;
  return os.str();
}

}  // namespace

DomainOverflowError::DomainOverflowError(double ratio, double threshold)
    : Error(overflow_message(ratio, threshold)), ratio_(ratio) {}

InstabilityError::InstabilityError(double t)
    : Error(instability_message(t)), t_(t) {}

ConvergenceError::ConvergenceError(const std::string& what, std::string trace)
    : Error(what), trace_(std::move(trace)) {}

}  // namespace csswg

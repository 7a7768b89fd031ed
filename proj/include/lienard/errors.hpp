#pragma once

#include <stdexcept>
#include <string>

namespace lienard {

// Base for failures of the numerical machinery itself (as opposed to bad
// input, which uses std::invalid_argument). The CLI maps these to exit
// code 3.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Adaptive stepping drove the step size below the representable floor,
// usually a sign of a singularity or extreme stiffness on the path.
class StepSizeUnderflow : public NumericalError {
public:
  StepSizeUnderflow(const std::string& msg, double x, double y, double t)
      : NumericalError(msg), x(x), y(y), t(t) {}
  double x, y, t;  // where the integration died
};

// An iterative refinement (separatrix cutoff doubling, ...) hit its cap
// before reaching the requested tolerance.
class ConvergenceFailure : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// A sign bracket required by a bisection does not exist where expected.
class BracketFailure : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// A separatrix crossed the vertical axis at y >= 0, outside the regime the
// rest of the pipeline assumes. Surfaced, never clamped.
class AnomalousCrossing : public NumericalError {
public:
  AnomalousCrossing(const std::string& msg, double value)
      : NumericalError(msg), value(value) {}
  double value;
};

}  // namespace lienard

#pragma once

#include <stdexcept>
#include <string>

namespace bt {

/// Base class for every error thrown by the toolkit.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Wrong number of operands/inputs for an operation or gate.
struct arity_error : error {
  using error::error;
};

/// Value outside its representable domain (trit, codec range, non-finite voltage).
struct range_error : error {
  using error::error;
};

/// A stated precondition does not hold (e.g. non-one-hot encoder input).
struct precondition_error : error {
  using error::error;
};

/// Malformed netlist / truth-table / config file.
struct parse_error : error {
  using error::error;
};

/// Structural problem while building or validating a circuit.
struct build_error : error {
  using error::error;
};

/// Net connectivity problem found during elaboration or evaluation.
struct wiring_error : error {
  using error::error;
};

/// Analog fixed-point failure (non-convergence, oscillation, singular matrix).
struct solver_error : error {
  using error::error;
};

} // namespace bt

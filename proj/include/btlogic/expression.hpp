#pragma once

#include <span>
#include <string>
#include <vector>

#include "btlogic/trit.hpp"

namespace bt {

/// Min/max expression over one-hot decoder lines, the output language of
/// decoder-based synthesis. Line(var, k) is the decoder output that is +1
/// exactly when input `var` equals k, and -1 otherwise.
struct Expr {
  enum class Kind { constant, line, min_op, max_op };

  Kind kind = Kind::constant;
  Trit value = Trit::N;    // constant
  int var = 0;             // line
  Trit level = Trit::Z;    // line
  std::vector<Expr> children; // min_op / max_op

  static Expr constant(Trit v);
  static Expr line(int var, Trit level);
  static Expr min_of(std::vector<Expr> children);
  static Expr max_of(std::vector<Expr> children);

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Line(var, k) evaluates to +1 if inputs[var] == k else -1; min/max fold
/// their children; an empty max is -1 and an empty min is +1 (fold identities).
Trit expr_eval(const Expr& e, std::span<const Trit> inputs);

/// Prints in the established notation: '·' is minimum, '+' is maximum,
/// lines carry subscripts (A₋₁B₁); consecutive lines inside a min are
/// juxtaposed.
std::string to_string(const Expr& e, std::span<const std::string> names = {});

} // namespace bt

#include "btlogic/expression.hpp"

#include "btlogic/errors.hpp"
#include "btlogic/truth_table.hpp"

namespace bt {

Expr Expr::constant(Trit v) {
  Expr e;
  e.kind = Kind::constant;
  e.value = v;
  return e;
}

Expr Expr::line(int var, Trit level) {
  Expr e;
  e.kind = Kind::line;
  e.var = var;
  e.level = level;
  return e;
}

Expr Expr::min_of(std::vector<Expr> children) {
  Expr e;
  e.kind = Kind::min_op;
  e.children = std::move(children);
  return e;
}

Expr Expr::max_of(std::vector<Expr> children) {
  Expr e;
  e.kind = Kind::max_op;
  e.children = std::move(children);
  return e;
}

Trit expr_eval(const Expr& e, std::span<const Trit> inputs) {
  switch (e.kind) {
  case Expr::Kind::constant:
    return e.value;
  case Expr::Kind::line:
    if (e.var < 0 || e.var >= static_cast<int>(inputs.size()))
      throw range_error("expression references unbound variable " + std::to_string(e.var));
    return inputs[static_cast<std::size_t>(e.var)] == e.level ? Trit::P : Trit::N;
  case Expr::Kind::min_op: {
    Trit r = Trit::P;
    for (const Expr& c : e.children)
      r = tmin(r, expr_eval(c, inputs));
    return r;
  }
  case Expr::Kind::max_op: {
    Trit r = Trit::N;
    for (const Expr& c : e.children)
      r = tmax(r, expr_eval(c, inputs));
    return r;
  }
  }
  throw range_error("corrupt expression node");
}

namespace {

// UTF-8 subscripts for the line levels.
const char* subscript(Trit level) {
  switch (level) {
  case Trit::N: return "\xE2\x82\x8B\xE2\x82\x81"; // ₋₁
  case Trit::Z: return "\xE2\x82\x80";             // ₀
  default: return "\xE2\x82\x81";                  // ₁
  }
}

std::string name_of(int var, std::span<const std::string> names) {
  if (var >= 0 && var < static_cast<int>(names.size()))
    return names[static_cast<std::size_t>(var)];
  return var_name(var);
}

void print(const Expr& e, std::span<const std::string> names, bool parenthesize,
           std::string& out) {
  switch (e.kind) {
  case Expr::Kind::constant:
    out += trit_name(e.value);
    return;
  case Expr::Kind::line:
    out += name_of(e.var, names);
    out += subscript(e.level);
    return;
  case Expr::Kind::min_op: {
    // The minimum binds tighter than the maximum, so a min never wraps
    // itself; only max children need explicit parentheses.
    if (e.children.empty()) {
      out += "1";
      return;
    }
    for (std::size_t i = 0; i < e.children.size(); ++i) {
      const Expr& c = e.children[i];
      // Juxtapose consecutive lines (A₋₁B₁); use an explicit dot elsewhere.
      if (i > 0 && !(c.kind == Expr::Kind::line &&
                     e.children[i - 1].kind == Expr::Kind::line))
        out += "\xC2\xB7"; // ·
      if (c.kind == Expr::Kind::max_op) {
        out += "(";
        print(c, names, false, out);
        out += ")";
      } else {
        print(c, names, true, out);
      }
    }
    return;
  }
  case Expr::Kind::max_op: {
    if (e.children.empty()) {
      out += "-1";
      return;
    }
    bool open = parenthesize && e.children.size() > 1;
    if (open)
      out += "(";
    for (std::size_t i = 0; i < e.children.size(); ++i) {
      if (i > 0)
        out += " + ";
      print(e.children[i], names, true, out);
    }
    if (open)
      out += ")";
    return;
  }
  }
}

} // namespace

std::string to_string(const Expr& e, std::span<const std::string> names) {
  std::string out;
  print(e, names, false, out);
  return out;
}

} // namespace bt

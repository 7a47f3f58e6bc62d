#pragma once

#include <span>
#include <string>
#include <vector>

#include "btlogic/gates.hpp"
#include "btlogic/netlist.hpp"
#include "btlogic/truth_table.hpp"

namespace bt {

/// Ideal-logic evaluator. Flattens once, maps cell annotations and
/// behavioral components onto gate primitives, levelizes them, and then
/// evaluates any number of input tuples. Device physics never enters:
/// memristor groups are interpreted through their cell annotations.
class DigitalCircuit {
public:
  explicit DigitalCircuit(const Netlist& n);

  std::vector<Trit> eval(std::span<const Trit> inputs) const;

  int num_inputs() const { return static_cast<int>(input_nets_.size()); }
  int num_outputs() const { return static_cast<int>(output_nets_.size()); }
  const std::vector<std::string>& input_names() const { return input_names_; }
  const std::vector<std::string>& output_names() const { return output_names_; }

private:
  struct Prim {
    enum class Op { tmin, tmax, sti, pti, nti, dec13_y0, sub1, sub2, constant };
    Op op;
    Trit const_value = Trit::Z;
    std::vector<std::uint32_t> in;
    std::vector<std::uint32_t> out;
    std::string name;
  };

  std::size_t net_count_ = 0;
  std::vector<Prim> prims_;
  std::vector<std::size_t> order_; // topological
  std::vector<std::pair<std::uint32_t, Trit>> fixed_; // rail nets
  std::vector<std::uint32_t> input_nets_;
  std::vector<std::uint32_t> output_nets_;
  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
};

std::vector<Trit> eval_digital(const Netlist& n, std::span<const Trit> inputs);

/// Exhaustive truth table of a circuit (arity capped at 9).
TruthTable sweep(const Netlist& n);

/// One-hot input patterns only; the defined domain of encoder circuits.
std::vector<OneHotRow> sweep_onehot(const Netlist& n);

struct EquivResult {
  bool equal = false;
  std::vector<std::size_t> counterexamples; // canonical row indices

  explicit operator bool() const { return equal; }
};

EquivResult equiv(const TruthTable& a, const TruthTable& b);
EquivResult equiv(const Netlist& a, const Netlist& b);
EquivResult equiv(const Netlist& a, const TruthTable& b);

} // namespace bt

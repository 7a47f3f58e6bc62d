#include "btlogic/sim_digital.hpp"

#include <algorithm>
#include <optional>

namespace bt {

namespace {

Trit eval_sub1(Trit x, const std::string& name) {
  if (x == Trit::Z)
    throw precondition_error("subcircuit1 '" + name + "' driven with 0 (outside contract)");
  return Trit::N;
}

Trit eval_sub2(Trit x, const std::string& name) {
  if (x == Trit::Z)
    throw precondition_error("subcircuit2 '" + name + "' driven with 0 (outside contract)");
  return x == Trit::N ? Trit::Z : Trit::N;
}

} // namespace

DigitalCircuit::DigitalCircuit(const Netlist& n) {
  Netlist flat = flatten(n);
  {
    auto issues = validate(flat);
    if (!issues.empty())
      throw build_error("cannot simulate invalid netlist '" + n.name +
                        "': " + issues.front().message);
  }
  if (loose_device_count(flat) > 0)
    throw wiring_error("netlist '" + n.name +
                       "' has device components outside any recognized cell; "
                       "the digital backend cannot interpret them");

  net_count_ = flat.nets.size();

  for (std::size_t i = 0; i < flat.nets.size(); ++i)
    if (flat.nets[i].rail)
      fixed_.emplace_back(static_cast<std::uint32_t>(i), rail_level(*flat.nets[i].rail));

  for (const Port& p : flat.ports) {
    if (p.dir == PortDir::in) {
      input_nets_.push_back(p.net.value);
      input_names_.push_back(p.name);
    } else {
      output_nets_.push_back(p.net.value);
      output_names_.push_back(p.name);
    }
  }

  // Cells and behavioral components become primitives.
  for (const CellInstance& ci : flat.cells) {
    Prim prim;
    prim.name = ci.path;
    switch (ci.tag.kind) {
    case CellKind::tmin: prim.op = Prim::Op::tmin; break;
    case CellKind::tmax: prim.op = Prim::Op::tmax; break;
    case CellKind::sti: prim.op = Prim::Op::sti; break;
    case CellKind::pti: prim.op = Prim::Op::pti; break;
    case CellKind::nti: prim.op = Prim::Op::nti; break;
    case CellKind::dec13_y0: prim.op = Prim::Op::dec13_y0; break;
    }
    for (NetId id : ci.inputs)
      prim.in.push_back(id.value);
    for (NetId id : ci.outputs)
      prim.out.push_back(id.value);
    if (prim.out.size() != 1)
      throw build_error("cell '" + ci.path + "' must have exactly one output");
    prims_.push_back(std::move(prim));
  }
  for (const Component& c : flat.components) {
    if (const auto* b = std::get_if<BehavioralGate>(&c)) {
      Prim prim;
      prim.name = b->name;
      prim.op = b->kind == BehavioralKind::sub1 ? Prim::Op::sub1 : Prim::Op::sub2;
      if (b->inputs.size() != 1)
        throw build_error("behavioral '" + b->name + "' must have exactly one input");
      prim.in.push_back(b->inputs[0].value);
      prim.out.push_back(b->output.value);
      prims_.push_back(std::move(prim));
    } else if (const auto* tie = std::get_if<RailTie>(&c)) {
      Prim prim;
      prim.name = tie->name;
      prim.op = Prim::Op::constant;
      prim.const_value = tie->level;
      prim.out.push_back(tie->net.value);
      prims_.push_back(std::move(prim));
    }
  }

  // Single-driver rule over (primitives | rails | input ports).
  std::vector<int> driver(net_count_, -1);
  std::vector<bool> sourced(net_count_, false);
  for (auto [net, level] : fixed_) {
    (void)level;
    sourced[net] = true;
  }
  for (std::uint32_t net : input_nets_) {
    if (sourced[net])
      throw wiring_error("input port net '" + flat.nets[net].name + "' is tied to a rail");
    sourced[net] = true;
  }
  for (std::size_t p = 0; p < prims_.size(); ++p) {
    for (std::uint32_t net : prims_[p].out) {
      if (sourced[net] || driver[net] >= 0)
        throw wiring_error("net '" + flat.nets[net].name + "' is driven more than once");
      driver[net] = static_cast<int>(p);
    }
  }

  // Every primitive input and circuit output must be sourced by someone.
  auto has_source = [&](std::uint32_t net) { return sourced[net] || driver[net] >= 0; };
  for (const Prim& prim : prims_)
    for (std::uint32_t net : prim.in)
      if (!has_source(net))
        throw wiring_error("net '" + flat.nets[net].name + "' feeding '" + prim.name +
                           "' has no driver");
  for (std::size_t i = 0; i < output_nets_.size(); ++i)
    if (!has_source(output_nets_[i]))
      throw wiring_error("output '" + output_names_[i] + "' is unreachable (no driver)");

  // Levelize (Kahn). Whatever refuses to schedule sits on a cycle.
  std::vector<int> pending(prims_.size(), 0);
  std::vector<std::vector<std::size_t>> dependents(net_count_);
  for (std::size_t p = 0; p < prims_.size(); ++p) {
    for (std::uint32_t net : prims_[p].in) {
      if (driver[net] >= 0) {
        ++pending[p];
        dependents[net].push_back(p);
      }
    }
  }
  std::vector<std::size_t> queue;
  for (std::size_t p = 0; p < prims_.size(); ++p)
    if (pending[p] == 0)
      queue.push_back(p);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t p = queue[head];
    order_.push_back(p);
    for (std::uint32_t net : prims_[p].out)
      for (std::size_t dep : dependents[net])
        if (--pending[dep] == 0)
          queue.push_back(dep);
  }
  if (order_.size() != prims_.size()) {
    for (std::size_t p = 0; p < prims_.size(); ++p)
      if (pending[p] > 0)
        throw build_error("combinational cycle through '" + prims_[p].name + "'");
  }
}

std::vector<Trit> DigitalCircuit::eval(std::span<const Trit> inputs) const {
  if (inputs.size() != input_nets_.size())
    throw arity_error("circuit expects " + std::to_string(input_nets_.size()) +
                      " inputs, got " + std::to_string(inputs.size()));

  std::vector<Trit> value(net_count_, Trit::Z);
  for (auto [net, level] : fixed_)
    value[net] = level;
  for (std::size_t i = 0; i < inputs.size(); ++i)
    value[input_nets_[i]] = inputs[i];

  for (std::size_t p : order_) {
    const Prim& prim = prims_[p];
    Trit out = Trit::Z;
    switch (prim.op) {
    case Prim::Op::tmin: {
      out = value[prim.in.at(0)];
      for (std::size_t i = 1; i < prim.in.size(); ++i)
        out = tmin(out, value[prim.in[i]]);
      break;
    }
    case Prim::Op::tmax: {
      out = value[prim.in.at(0)];
      for (std::size_t i = 1; i < prim.in.size(); ++i)
        out = tmax(out, value[prim.in[i]]);
      break;
    }
    case Prim::Op::sti: out = sti(value[prim.in.at(0)]); break;
    case Prim::Op::pti: out = pti(value[prim.in.at(0)]); break;
    case Prim::Op::nti: out = nti(value[prim.in.at(0)]); break;
    case Prim::Op::dec13_y0: {
      // T2 conducts at input +1, T3 at YM1 = +1; either pulls the output low.
      Trit in = value[prim.in.at(0)];
      Trit ym1 = value[prim.in.at(1)];
      out = (in == Trit::P || ym1 == Trit::P) ? Trit::N : Trit::P;
      break;
    }
    case Prim::Op::sub1: out = eval_sub1(value[prim.in.at(0)], prim.name); break;
    case Prim::Op::sub2: out = eval_sub2(value[prim.in.at(0)], prim.name); break;
    case Prim::Op::constant: out = prim.const_value; break;
    }
    value[prim.out[0]] = out;
  }

  std::vector<Trit> outputs;
  outputs.reserve(output_nets_.size());
  for (std::uint32_t net : output_nets_)
    outputs.push_back(value[net]);
  return outputs;
}

std::vector<Trit> eval_digital(const Netlist& n, std::span<const Trit> inputs) {
  return DigitalCircuit(n).eval(inputs);
}

TruthTable sweep(const Netlist& n) {
  DigitalCircuit circuit(n);
  return make_table(circuit.num_inputs(), circuit.num_outputs(),
                    [&](std::span<const Trit> in) { return circuit.eval(in); });
}

std::vector<OneHotRow> sweep_onehot(const Netlist& n) {
  DigitalCircuit circuit(n);
  std::vector<OneHotRow> rows;
  const int k = circuit.num_inputs();
  for (int hot = k - 1; hot >= 0; --hot) { // lowest encoded value first
    OneHotRow row;
    row.inputs.assign(static_cast<std::size_t>(k), Trit::N);
    row.inputs[static_cast<std::size_t>(hot)] = Trit::P;
    row.outputs = circuit.eval(row.inputs);
    rows.push_back(std::move(row));
  }
  return rows;
}

EquivResult equiv(const TruthTable& a, const TruthTable& b) {
  check_table(a);
  check_table(b);
  if (a.arity_in != b.arity_in || a.arity_out != b.arity_out)
    throw arity_error("cannot compare tables of different arity");
  EquivResult r;
  for (std::size_t row = 0; row < a.rows.size(); ++row)
    if (a.rows[row] != b.rows[row])
      r.counterexamples.push_back(row);
  r.equal = r.counterexamples.empty();
  return r;
}

EquivResult equiv(const Netlist& a, const Netlist& b) { return equiv(sweep(a), sweep(b)); }
EquivResult equiv(const Netlist& a, const TruthTable& b) { return equiv(sweep(a), b); }

} // namespace bt

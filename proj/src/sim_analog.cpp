#include "btlogic/sim_analog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "btlogic/truth_table.hpp"

namespace bt {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct MemBranch {
  std::size_t comp;
  MemristorModel model; // state field tracks the live assignment
  std::uint32_t plus, minus;
};

struct SwitchBranch {
  std::size_t comp;
  SwitchModel model;
  std::uint32_t gate, drain, source;
};

/// Flattened, validated, analog-ready view of a netlist.
struct AnalogCircuit {
  Netlist flat;
  LevelMap levels;
  ToolkitConfig cfg;
  std::vector<MemBranch> mems;
  std::vector<SwitchBranch> switches;
  std::vector<std::uint32_t> input_nets;
  std::vector<double> fixed; // NaN = solve for it; otherwise pinned voltage
  std::vector<int> unknown_index;
  std::size_t num_unknowns = 0;

  AnalogCircuit(const Netlist& n, const LevelMap& lm, const ToolkitConfig& c)
      : flat(flatten(n)), levels(lm), cfg(c) {
    check_config(cfg);
    auto issues = validate(flat);
    if (!issues.empty())
      throw build_error("cannot settle invalid netlist '" + n.name +
                        "': " + issues.front().message);

    fixed.assign(flat.nets.size(), kUnset);
    for (std::size_t i = 0; i < flat.nets.size(); ++i)
      if (flat.nets[i].rail)
        fixed[i] = levels.to_voltage(rail_level(*flat.nets[i].rail));

    for (std::size_t i = 0; i < flat.components.size(); ++i) {
      const Component& comp = flat.components[i];
      if (const auto* m = std::get_if<Memristor>(&comp)) {
        mems.push_back(
            {i, make_memristor(cfg.device, m->initial_state), m->plus.value, m->minus.value});
      } else if (const auto* t = std::get_if<Transistor>(&comp)) {
        SwitchModel model{t->kind, t->v_th, cfg.device.r_on, cfg.device.r_off};
        switches.push_back({i, model, t->gate.value, t->drain.value, t->source.value});
      } else if (std::holds_alternative<BehavioralGate>(comp)) {
        throw precondition_error(
            "netlist '" + n.name +
            "' contains behavioral primitives; the analog backend handles "
            "device-level circuits only");
      } else if (const auto* tie = std::get_if<RailTie>(&comp)) {
        const double v = levels.to_voltage(tie->level);
        double& slot = fixed[tie->net.value];
        if (!std::isnan(slot) && slot != v)
          throw build_error("net '" + flat.nets[tie->net.value].name +
                            "' is tied to two different levels");
        slot = v;
      }
    }

    for (const Port& p : flat.ports) {
      if (p.dir != PortDir::in)
        continue;
      if (!std::isnan(fixed[p.net.value]))
        throw build_error("input port '" + p.name + "' is tied to a fixed level");
      input_nets.push_back(p.net.value);
    }

    unknown_index.assign(flat.nets.size(), -1);
    for (std::size_t i = 0; i < flat.nets.size(); ++i)
      if (std::isnan(fixed[i]) &&
          std::find(input_nets.begin(), input_nets.end(), i) == input_nets.end())
        unknown_index[i] = static_cast<int>(num_unknowns++);
  }

  DeviceStates default_states() const {
    DeviceStates st;
    for (const MemBranch& m : mems)
      st.memristors.push_back(m.model.state);
    st.switches_on.assign(switches.size(), false);
    return st;
  }

  /// Nodal analysis for one device-state assignment. Dense Gaussian
  /// elimination with partial pivoting; the matrices here stay tiny.
  std::vector<double> solve(const DeviceStates& st, std::span<const Trit> inputs) const {
    std::vector<double> voltage(fixed);
    for (std::size_t i = 0; i < input_nets.size(); ++i)
      voltage[input_nets[i]] = levels.to_voltage(inputs[i]);

    const std::size_t n = num_unknowns;
    std::vector<double> a(n * n, 0.0), rhs(n, 0.0), x(n, 0.0);

    auto stamp = [&](std::uint32_t u, std::uint32_t v, double g) {
      const int iu = unknown_index[u];
      const int iv = unknown_index[v];
      if (iu >= 0) {
        a[static_cast<std::size_t>(iu) * n + static_cast<std::size_t>(iu)] += g;
        if (iv >= 0)
          a[static_cast<std::size_t>(iu) * n + static_cast<std::size_t>(iv)] -= g;
        else
          rhs[static_cast<std::size_t>(iu)] += g * voltage[v];
      }
      if (iv >= 0) {
        a[static_cast<std::size_t>(iv) * n + static_cast<std::size_t>(iv)] += g;
        if (iu >= 0)
          a[static_cast<std::size_t>(iv) * n + static_cast<std::size_t>(iu)] -= g;
        else
          rhs[static_cast<std::size_t>(iv)] += g * voltage[u];
      }
    };

    for (std::size_t i = 0; i < mems.size(); ++i) {
      MemristorModel model = mems[i].model;
      model.state = st.memristors[i];
      stamp(mems[i].plus, mems[i].minus, 1.0 / model.resistance());
    }
    for (std::size_t i = 0; i < switches.size(); ++i)
      stamp(switches[i].drain, switches[i].source,
            1.0 / switch_resistance(switches[i].model, st.switches_on[i]));

    // LU with partial pivoting, in place.
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
      perm[i] = i;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      double best = std::fabs(a[perm[col] * n + col]);
      for (std::size_t row = col + 1; row < n; ++row) {
        double cand = std::fabs(a[perm[row] * n + col]);
        if (cand > best) {
          best = cand;
          pivot = row;
        }
      }
      if (best < 1e-18) {
        for (std::size_t net = 0; net < unknown_index.size(); ++net)
          if (unknown_index[net] == static_cast<int>(col))
            throw solver_error("floating node '" + flat.nets[net].name +
                               "': no conductive path to any source");
        throw solver_error("singular conductance matrix");
      }
      std::swap(perm[col], perm[pivot]);
      const double diag = a[perm[col] * n + col];
      for (std::size_t row = col + 1; row < n; ++row) {
        const double factor = a[perm[row] * n + col] / diag;
        if (factor == 0.0)
          continue;
        a[perm[row] * n + col] = 0.0;
        for (std::size_t k = col + 1; k < n; ++k)
          a[perm[row] * n + k] -= factor * a[perm[col] * n + k];
        rhs[perm[row]] -= factor * rhs[perm[col]];
      }
    }
    for (std::size_t i = n; i-- > 0;) {
      double sum = rhs[perm[i]];
      for (std::size_t k = i + 1; k < n; ++k)
        sum -= a[perm[i] * n + k] * x[k];
      x[i] = sum / a[perm[i] * n + i];
    }

    for (std::size_t net = 0; net < unknown_index.size(); ++net)
      if (unknown_index[net] >= 0)
        voltage[net] = x[static_cast<std::size_t>(unknown_index[net])];
    return voltage;
  }

  DeviceStates update(const DeviceStates& st, const std::vector<double>& voltage) const {
    DeviceStates next = st;
    const double eps = cfg.solver.state_epsilon;
    for (std::size_t i = 0; i < mems.size(); ++i) {
      MemristorModel model = mems[i].model;
      model.state = st.memristors[i];
      const double v = voltage[mems[i].plus] - voltage[mems[i].minus];
      next.memristors[i] = memristor_next_state(model, v, eps);
    }
    for (std::size_t i = 0; i < switches.size(); ++i)
      next.switches_on[i] = switch_conducts(switches[i].model, voltage[switches[i].gate],
                                            voltage[switches[i].source], eps);
    return next;
  }

  double dissipation(const DeviceStates& st, const std::vector<double>& voltage) const {
    double p = 0.0;
    for (std::size_t i = 0; i < mems.size(); ++i) {
      MemristorModel model = mems[i].model;
      model.state = st.memristors[i];
      const double dv = voltage[mems[i].plus] - voltage[mems[i].minus];
      p += dv * dv / model.resistance();
    }
    for (std::size_t i = 0; i < switches.size(); ++i) {
      const double dv = voltage[switches[i].drain] - voltage[switches[i].source];
      p += dv * dv / switch_resistance(switches[i].model, st.switches_on[i]);
    }
    return p;
  }

  SteadyState run(std::span<const Trit> inputs, const DeviceStates* initial,
                  std::vector<double>* power_samples) const {
    if (inputs.size() != input_nets.size())
      throw arity_error("circuit expects " + std::to_string(input_nets.size()) +
                        " inputs, got " + std::to_string(inputs.size()));

    DeviceStates st = initial ? *initial : default_states();
    if (st.memristors.size() != mems.size() || st.switches_on.size() != switches.size())
      throw arity_error("device-state vector does not match the circuit");

    std::vector<DeviceStates> history;
    std::vector<double> voltage;
    bool converged = false;
    bool oscillation = false;
    int iterations = 0;

    for (int iter = 1; iter <= cfg.solver.max_iterations; ++iter) {
      voltage = solve(st, inputs);
      if (power_samples)
        power_samples->push_back(dissipation(st, voltage));
      DeviceStates next = update(st, voltage);
      iterations = iter;
      if (next == st) {
        converged = true;
        break;
      }
      auto seen = std::find(history.begin(), history.end(), next);
      if (seen != history.end()) {
        const std::size_t period = static_cast<std::size_t>(history.end() - seen) + 1;
        if (period == 2) {
          // Break the tie toward the lower-dissipation assignment.
          std::vector<double> alt_voltage = solve(next, inputs);
          if (power_samples)
            power_samples->push_back(dissipation(next, alt_voltage));
          if (dissipation(next, alt_voltage) < dissipation(st, voltage)) {
            st = std::move(next);
            voltage = std::move(alt_voltage);
          }
          converged = true;
          oscillation = true;
          break;
        }
        throw solver_error("device states oscillate with period " + std::to_string(period));
      }
      history.push_back(st);
      st = std::move(next);
    }
    if (!converged)
      throw solver_error("no fixed point within " +
                         std::to_string(cfg.solver.max_iterations) + " iterations");

    SteadyState result;
    result.circuit = flat;
    result.node_voltages = voltage;
    result.states = st;
    result.converged = true;
    result.oscillation_resolved = oscillation;
    result.iterations = iterations;

    // Branch currents and the KCL residual at every solved node.
    result.branch_currents.assign(flat.components.size(), 0.0);
    std::vector<double> node_sum(flat.nets.size(), 0.0);
    for (std::size_t i = 0; i < mems.size(); ++i) {
      MemristorModel model = mems[i].model;
      model.state = st.memristors[i];
      const double current =
          (voltage[mems[i].plus] - voltage[mems[i].minus]) / model.resistance();
      result.branch_currents[mems[i].comp] = current;
      node_sum[mems[i].plus] -= current;
      node_sum[mems[i].minus] += current;
    }
    for (std::size_t i = 0; i < switches.size(); ++i) {
      const double current =
          (voltage[switches[i].drain] - voltage[switches[i].source]) /
          switch_resistance(switches[i].model, st.switches_on[i]);
      result.branch_currents[switches[i].comp] = current;
      node_sum[switches[i].drain] -= current;
      node_sum[switches[i].source] += current;
    }
    double residual = 0.0;
    for (std::size_t net = 0; net < flat.nets.size(); ++net)
      if (unknown_index[net] >= 0)
        residual = std::max(residual, std::fabs(node_sum[net]));
    result.kcl_residual = residual;
    if (residual >= cfg.solver.kcl_tolerance)
      throw solver_error("KCL residual " + std::to_string(residual) +
                         " A exceeds the solver tolerance");
    return result;
  }
};

} // namespace

SteadyState settle(const Netlist& n, std::span<const Trit> inputs, const LevelMap& levels,
                   const ToolkitConfig& cfg, const DeviceStates* initial) {
  AnalogCircuit circuit(n, levels, cfg);
  return circuit.run(inputs, initial, nullptr);
}

std::vector<Trit> read_outputs(const SteadyState& s, const LevelMap& levels) {
  if (!s.converged)
    throw solver_error("cannot read outputs of an unconverged state");
  std::vector<Trit> out;
  for (const Port& p : s.circuit.ports)
    if (p.dir == PortDir::out)
      out.push_back(levels.to_trit(s.node_voltages.at(p.net.value)));
  return out;
}

double static_power(const SteadyState& s) {
  if (!s.converged)
    throw solver_error("cannot compute power of an unconverged state");
  double p = 0.0;
  for (std::size_t i = 0; i < s.circuit.components.size(); ++i) {
    const Component& comp = s.circuit.components[i];
    double dv = 0.0;
    if (const auto* m = std::get_if<Memristor>(&comp))
      dv = s.node_voltages[m->plus.value] - s.node_voltages[m->minus.value];
    else if (const auto* t = std::get_if<Transistor>(&comp))
      dv = s.node_voltages[t->drain.value] - s.node_voltages[t->source.value];
    else
      continue;
    p += std::fabs(dv * s.branch_currents[i]);
  }
  return p;
}

PowerReport power_report(const Netlist& n, const LevelMap& levels, const ToolkitConfig& cfg) {
  AnalogCircuit circuit(n, levels, cfg);
  const int arity = static_cast<int>(circuit.input_nets.size());
  const std::size_t rows = table_rows(arity);

  PowerReport report;
  report.arity = arity;

  std::vector<DeviceStates> settled_states;
  settled_states.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    auto inputs = row_inputs(arity, r);
    SteadyState s = circuit.run(inputs, nullptr, nullptr);
    report.static_per_input.push_back(static_power(s));
    settled_states.push_back(std::move(s.states));
  }

  double sum = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    sum += report.static_per_input[r];
    if (report.static_per_input[r] > report.max_static) {
      report.max_static = report.static_per_input[r];
      report.peak_input_row = r;
    }
  }
  report.average = sum / static_cast<double>(rows);

  // Dynamic proxy: every single-step transition between adjacent sweep rows,
  // re-settled from the previous row's device states.
  bool any_sample = false;
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    auto inputs = row_inputs(arity, r + 1);
    std::vector<double> samples;
    circuit.run(inputs, &settled_states[r], &samples);
    for (double p : samples) {
      any_sample = true;
      if (p > report.max_instantaneous) {
        report.max_instantaneous = p;
        report.peak_transition_from = r;
        report.peak_transition_to = r + 1;
      }
    }
  }
  if (!any_sample)
    report.max_instantaneous = report.average; // no transitions, no dynamics
  report.dynamic_power = std::fabs(report.max_instantaneous - report.average);
  return report;
}

} // namespace bt

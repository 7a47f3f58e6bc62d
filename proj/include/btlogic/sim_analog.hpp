#pragma once

#include <span>
#include <vector>

#include "btlogic/config.hpp"
#include "btlogic/netlist.hpp"
#include "btlogic/trit.hpp"

namespace bt {

/// Discrete device-state assignment for a flattened netlist: one entry per
/// memristor and per transistor, in flattened component order.
struct DeviceStates {
  std::vector<MemState> memristors;
  std::vector<bool> switches_on;

  friend bool operator==(const DeviceStates&, const DeviceStates&) = default;
};

/// Self-consistent DC operating point: node voltages and branch currents
/// solve the resistive network implied by `states`, and `states` is the
/// fixed point of the device update rules under those voltages.
struct SteadyState {
  Netlist circuit; // flattened; the vectors below index its nets/components
  std::vector<double> node_voltages;
  std::vector<double> branch_currents;
  DeviceStates states;
  bool converged = false;
  bool oscillation_resolved = false; // a 2-cycle was broken by lower power
  int iterations = 0;
  double kcl_residual = 0.0; // max |sum of currents| at any solved node
};

/// Fixed-point switch-level solve: guess device states, solve the linear
/// resistive network by nodal analysis, update memristor states from branch
/// voltage and switch states from gate-source drive, repeat until unchanged.
/// `initial` overrides the default start (memristors at their declared
/// states, all switches off).
SteadyState settle(const Netlist& n, std::span<const Trit> inputs, const LevelMap& levels,
                   const ToolkitConfig& cfg = {}, const DeviceStates* initial = nullptr);

/// Quantizes the output-port voltages of a converged state.
std::vector<Trit> read_outputs(const SteadyState& s, const LevelMap& levels);

/// Sum over components of |V_across * I_through|.
double static_power(const SteadyState& s);

struct PowerReport {
  int arity = 0;
  std::vector<double> static_per_input; // canonical sweep order
  double average = 0.0;
  double max_static = 0.0;
  std::size_t peak_input_row = 0; // argmax of static_per_input
  double max_instantaneous = 0.0;
  std::size_t peak_transition_from = 0;
  std::size_t peak_transition_to = 0;
  double dynamic_power = 0.0; // |max_instantaneous - average|
};

/// Static power for every input tuple plus a dynamic figure sampled across
/// every transition between consecutive sweep rows (each re-settled from the
/// previous row's device states; pre/intermediate/final configurations all
/// sampled).
PowerReport power_report(const Netlist& n, const LevelMap& levels,
                         const ToolkitConfig& cfg = {});

} // namespace bt

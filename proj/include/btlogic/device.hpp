#pragma once

#include <cstdint>

#include "btlogic/config.hpp"
#include "btlogic/errors.hpp"

namespace bt {

/// Memristor resistance state. The device is bistable and non-volatile:
/// it keeps its state until the voltage across it crosses a set/reset window.
enum class MemState : std::uint8_t { hrs, lrs };

/// Static bistable memristor. `v_across` is always measured positive
/// electrode minus negative electrode.
struct MemristorModel {
  double r_hrs = 1e6;
  double r_lrs = 1e4;
  double v_set = 0.5;    // > 0
  double v_reset = -0.35; // < 0
  MemState state = MemState::hrs;

  double resistance() const noexcept { return state == MemState::lrs ? r_lrs : r_hrs; }
};

inline MemristorModel make_memristor(const DeviceParams& p, MemState s = MemState::hrs) {
  return MemristorModel{p.r_hrs, p.r_lrs, p.v_set, p.v_reset, s};
}

/// State transition rule: v >= v_set drives LRS, v <= v_reset drives HRS,
/// anything in between leaves the state untouched (retention).
/// `epsilon` widens the comparison so exact-threshold dividers are stable.
inline MemState memristor_next_state(const MemristorModel& m, double v_across,
                                     double epsilon = 0.0) noexcept {
  if (v_across >= m.v_set - epsilon) return MemState::lrs;
  if (v_across <= m.v_reset + epsilon) return MemState::hrs;
  return m.state;
}

enum class SwitchKind : std::uint8_t { nmos, pmos };

/// Threshold-controlled ideal switch. A conducting branch has resistance
/// r_on, a blocked one r_off; the gate draws no current.
struct SwitchModel {
  SwitchKind kind = SwitchKind::nmos;
  double v_th = 0.8;
  double r_on = 100.0;
  double r_off = 1e8;
};

/// NMOS conducts iff V_gate - V_source >= v_th; PMOS iff V_source - V_gate >= |v_th|.
inline bool switch_conducts(const SwitchModel& s, double v_gate, double v_source,
                            double epsilon = 0.0) noexcept {
  const double vth = s.v_th < 0 ? -s.v_th : s.v_th;
  if (s.kind == SwitchKind::nmos)
    return v_gate - v_source >= vth - epsilon;
  return v_source - v_gate >= vth - epsilon;
}

inline double switch_resistance(const SwitchModel& s, bool on) noexcept {
  return on ? s.r_on : s.r_off;
}

} // namespace bt

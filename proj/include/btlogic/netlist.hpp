#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "btlogic/device.hpp"
#include "btlogic/errors.hpp"
#include "btlogic/trit.hpp"

namespace bt {

/// Supply rails. VDD carries +vdd, GND 0, VNEG -vdd.
enum class Rail : std::uint8_t { vdd, gnd, vneg };

constexpr Trit rail_level(Rail r) noexcept {
  switch (r) {
  case Rail::vdd: return Trit::P;
  case Rail::gnd: return Trit::Z;
  default: return Trit::N;
  }
}

const char* rail_name(Rail r) noexcept;
std::optional<Rail> parse_rail(std::string_view s) noexcept;

struct NetId {
  std::uint32_t value = UINT32_MAX;

  bool valid() const noexcept { return value != UINT32_MAX; }
  friend bool operator==(NetId a, NetId b) noexcept { return a.value == b.value; }
};

struct Net {
  std::string name;
  std::optional<Rail> rail;
};

/// Two-terminal memristor; `plus` is the top (positive) electrode.
struct Memristor {
  std::string name;
  NetId plus;
  NetId minus;
  MemState initial_state = MemState::hrs;
};

/// Threshold-switch transistor. Conduction is evaluated against the named
/// source terminal; device resistances come from the toolkit configuration.
struct Transistor {
  std::string name;
  SwitchKind kind = SwitchKind::nmos;
  double v_th = 0.8;
  NetId gate;
  NetId drain;
  NetId source;
};

/// Behavioral-fallback primitives. Their internals are not modeled; they
/// exist only in circuits flagged behavioral-fallback (the encoders) and are
/// excluded from component-count comparisons.
enum class BehavioralKind : std::uint8_t {
  sub1, // encoder helper: -1 -> -1, +1 -> -1 (0 is unreachable)
  sub2, // encoder helper: -1 -> 0, +1 -> -1 (0 is unreachable)
};

const char* behavioral_name(BehavioralKind k) noexcept;
std::optional<BehavioralKind> parse_behavioral(std::string_view s) noexcept;

struct BehavioralGate {
  std::string name;
  BehavioralKind kind = BehavioralKind::sub2;
  std::vector<NetId> inputs;
  NetId output;
};

/// Shorts a net to a constant logic level. Rails are free: ties contribute
/// no transistors or memristors to a cost report.
struct RailTie {
  std::string name;
  NetId net;
  Trit level = Trit::Z;
};

using Component = std::variant<Memristor, Transistor, BehavioralGate, RailTie>;

enum class PortDir : std::uint8_t { in, out };

struct Port {
  std::string name;
  PortDir dir = PortDir::in;
  NetId net;
};

/// Gate-level cell recognized by the digital simulator. Builders annotate
/// the leaf netlists they emit; the annotation survives flattening so the
/// digital backend never needs device physics.
enum class CellKind : std::uint8_t { tmin, tmax, sti, pti, nti, dec13_y0 };

const char* cell_name(CellKind k) noexcept;
std::optional<CellKind> parse_cell(std::string_view s) noexcept;

struct CellTag {
  CellKind kind = CellKind::tmin;
  int k = 1; // input count (2..9 for tmin/tmax)
};

/// Flattened record of one annotated cell: its ports mapped onto the parent
/// nets plus the indices of the device components it owns.
struct CellInstance {
  CellTag tag;
  std::string path;
  std::vector<NetId> inputs;
  std::vector<NetId> outputs;
  std::vector<std::size_t> component_indices;
};

struct Netlist;

struct Instance {
  std::string name;
  std::shared_ptr<const Netlist> def;
  std::vector<std::pair<std::string, NetId>> bindings; // child port -> parent net
};

struct Netlist {
  std::string name;
  std::optional<CellTag> cell;
  std::vector<Net> nets;
  std::vector<Component> components;
  std::vector<Port> ports;
  std::vector<Instance> children;
  std::vector<CellInstance> cells; // populated by flatten()

  NetId add_net(std::string net_name);
  NetId rail(Rail r); // get-or-create the rail net
  NetId find_net(std::string_view net_name) const noexcept;
  const Net& net(NetId id) const;

  void add_port(std::string port_name, PortDir dir, NetId net);
  const Port* find_port(std::string_view port_name) const noexcept;
  std::vector<const Port*> inputs() const;
  std::vector<const Port*> outputs() const;

  Instance& add_child(std::string inst_name, std::shared_ptr<const Netlist> def);
  void bind(Instance& inst, std::string_view port, NetId net);
};

struct ValidationIssue {
  enum class Kind {
    unknown_net,     // component terminal / port / binding names a missing net
    dangling_net,    // declared net that nothing touches
    duplicate_rail,  // two nets of the same rail kind in one scope
    floating_output, // output port whose net nothing else touches
    arity_error,     // bad child binding (missing, duplicate, no such port)
  };
  Kind kind;
  std::string where;
  std::string message;
};

const char* issue_kind_name(ValidationIssue::Kind k) noexcept;

/// Structural checks; a valid netlist yields an empty report.
std::vector<ValidationIssue> validate(const Netlist& n);

struct CostReport {
  int transistors = 0;
  int memristors = 0;
  int behavioral_primitives = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

/// "10T59M" (plus "+2B" when behavioral primitives are present).
std::string to_string(const CostReport& c);

/// Component tallies over the full hierarchy. Throws build_error if the
/// netlist does not validate.
CostReport count(const Netlist& n);

/// Inlines the whole hierarchy into a single level. Rail nets merge into one
/// net per rail; child nets are renamed "instance/net"; cell annotations are
/// converted into CellInstance records. Semantics-preserving for both
/// simulation backends.
Netlist flatten(const Netlist& n);

/// Device components not owned by any cell annotation (flattened form).
/// The digital backend refuses netlists where this is nonzero.
std::size_t loose_device_count(const Netlist& flat);

} // namespace bt

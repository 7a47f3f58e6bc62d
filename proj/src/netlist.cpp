#include "btlogic/netlist.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bt {

const char* rail_name(Rail r) noexcept {
  switch (r) {
  case Rail::vdd: return "VDD";
  case Rail::gnd: return "GND";
  default: return "VNEG";
  }
}

std::optional<Rail> parse_rail(std::string_view s) noexcept {
  if (s == "vdd" || s == "VDD") return Rail::vdd;
  if (s == "gnd" || s == "GND") return Rail::gnd;
  if (s == "vneg" || s == "VNEG") return Rail::vneg;
  return std::nullopt;
}

const char* behavioral_name(BehavioralKind k) noexcept {
  return k == BehavioralKind::sub1 ? "sub1" : "sub2";
}

std::optional<BehavioralKind> parse_behavioral(std::string_view s) noexcept {
  if (s == "sub1") return BehavioralKind::sub1;
  if (s == "sub2") return BehavioralKind::sub2;
  return std::nullopt;
}

const char* cell_name(CellKind k) noexcept {
  switch (k) {
  case CellKind::tmin: return "tmin";
  case CellKind::tmax: return "tmax";
  case CellKind::sti: return "sti";
  case CellKind::pti: return "pti";
  case CellKind::nti: return "nti";
  default: return "dec13_y0";
  }
}

std::optional<CellKind> parse_cell(std::string_view s) noexcept {
  if (s == "tmin") return CellKind::tmin;
  if (s == "tmax") return CellKind::tmax;
  if (s == "sti") return CellKind::sti;
  if (s == "pti") return CellKind::pti;
  if (s == "nti") return CellKind::nti;
  if (s == "dec13_y0") return CellKind::dec13_y0;
  return std::nullopt;
}

NetId Netlist::add_net(std::string net_name) {
  if (find_net(net_name).valid())
    throw build_error("duplicate net '" + net_name + "' in " + name);
  nets.push_back(Net{std::move(net_name), std::nullopt});
  return NetId{static_cast<std::uint32_t>(nets.size() - 1)};
}

NetId Netlist::rail(Rail r) {
  for (std::size_t i = 0; i < nets.size(); ++i)
    if (nets[i].rail == r)
      return NetId{static_cast<std::uint32_t>(i)};
  NetId id = add_net(rail_name(r));
  nets[id.value].rail = r;
  return id;
}

NetId Netlist::find_net(std::string_view net_name) const noexcept {
  for (std::size_t i = 0; i < nets.size(); ++i)
    if (nets[i].name == net_name)
      return NetId{static_cast<std::uint32_t>(i)};
  return NetId{};
}

const Net& Netlist::net(NetId id) const {
  if (!id.valid() || id.value >= nets.size())
    throw wiring_error("net id out of range in " + name);
  return nets[id.value];
}

void Netlist::add_port(std::string port_name, PortDir dir, NetId net_id) {
  if (find_port(port_name))
    throw build_error("duplicate port '" + port_name + "' in " + name);
  ports.push_back(Port{std::move(port_name), dir, net_id});
}

const Port* Netlist::find_port(std::string_view port_name) const noexcept {
  for (const Port& p : ports)
    if (p.name == port_name)
      return &p;
  return nullptr;
}

std::vector<const Port*> Netlist::inputs() const {
  std::vector<const Port*> r;
  for (const Port& p : ports)
    if (p.dir == PortDir::in)
      r.push_back(&p);
  return r;
}

std::vector<const Port*> Netlist::outputs() const {
  std::vector<const Port*> r;
  for (const Port& p : ports)
    if (p.dir == PortDir::out)
      r.push_back(&p);
  return r;
}

Instance& Netlist::add_child(std::string inst_name, std::shared_ptr<const Netlist> def) {
  children.push_back(Instance{std::move(inst_name), std::move(def), {}});
  return children.back();
}

void Netlist::bind(Instance& inst, std::string_view port, NetId net_id) {
  inst.bindings.emplace_back(std::string(port), net_id);
}

const char* issue_kind_name(ValidationIssue::Kind k) noexcept {
  using K = ValidationIssue::Kind;
  switch (k) {
  case K::unknown_net: return "unknown-net";
  case K::dangling_net: return "dangling-net";
  case K::duplicate_rail: return "duplicate-rail";
  case K::floating_output: return "floating-output";
  default: return "arity-error";
  }
}

namespace {

void visit_terminals(const Component& c, auto&& fn) {
  std::visit(
      [&](const auto& comp) {
        using T = std::decay_t<decltype(comp)>;
        if constexpr (std::is_same_v<T, Memristor>) {
          fn(comp.plus);
          fn(comp.minus);
        } else if constexpr (std::is_same_v<T, Transistor>) {
          fn(comp.gate);
          fn(comp.drain);
          fn(comp.source);
        } else if constexpr (std::is_same_v<T, BehavioralGate>) {
          for (NetId in : comp.inputs)
            fn(in);
          fn(comp.output);
        } else {
          fn(comp.net);
        }
      },
      c);
}

std::string component_name(const Component& c) {
  return std::visit([](const auto& comp) { return comp.name; }, c);
}

void validate_into(const Netlist& n, const std::string& where,
                   std::vector<ValidationIssue>& out) {
  using K = ValidationIssue::Kind;
  const std::size_t net_count = n.nets.size();
  std::vector<int> touches(net_count, 0);

  auto touch = [&](NetId id, const std::string& who) {
    if (!id.valid() || id.value >= net_count)
      out.push_back({K::unknown_net, where, who + " references a missing net"});
    else
      ++touches[id.value];
  };

  for (const Component& c : n.components)
    visit_terminals(c, [&](NetId id) { touch(id, "component '" + component_name(c) + "'"); });

  for (const Port& p : n.ports)
    touch(p.net, "port '" + p.name + "'");

  // Rail uniqueness per scope.
  int rail_seen[3] = {0, 0, 0};
  for (const Net& net : n.nets)
    if (net.rail)
      ++rail_seen[static_cast<int>(*net.rail)];
  for (int r = 0; r < 3; ++r)
    if (rail_seen[r] > 1)
      out.push_back({K::duplicate_rail, where,
                     std::string("more than one ") + rail_name(static_cast<Rail>(r)) +
                         " net declared"});

  for (const Instance& inst : n.children) {
    if (!inst.def) {
      out.push_back({K::arity_error, where, "child '" + inst.name + "' has no definition"});
      continue;
    }
    std::set<std::string> bound;
    for (const auto& [port, net] : inst.bindings) {
      touch(net, "child '" + inst.name + "' binding " + port);
      if (!inst.def->find_port(port))
        out.push_back({K::arity_error, where,
                       "child '" + inst.name + "' binds unknown port '" + port + "'"});
      if (!bound.insert(port).second)
        out.push_back({K::arity_error, where,
                       "child '" + inst.name + "' binds port '" + port + "' twice"});
    }
    for (const Port& p : inst.def->ports)
      if (!bound.count(p.name))
        out.push_back({K::arity_error, where,
                       "child '" + inst.name + "' leaves port '" + p.name + "' unbound"});
  }

  for (const auto& entry : n.cells) {
    for (NetId id : entry.inputs)
      touch(id, "cell '" + entry.path + "'");
    for (NetId id : entry.outputs)
      touch(id, "cell '" + entry.path + "'");
  }

  for (std::size_t i = 0; i < net_count; ++i) {
    if (touches[i] == 0 && !n.nets[i].rail)
      out.push_back({K::dangling_net, where, "net '" + n.nets[i].name + "' touches nothing"});
  }
  for (const Port& p : n.ports) {
    if (p.dir == PortDir::out && p.net.valid() && p.net.value < net_count &&
        touches[p.net.value] == 1 && !n.nets[p.net.value].rail)
      out.push_back(
          {K::floating_output, where, "output port '" + p.name + "' is driven by nothing"});
  }

  for (const Instance& inst : n.children)
    if (inst.def)
      validate_into(*inst.def, where.empty() ? inst.name : where + "/" + inst.name, out);
}

} // namespace

std::vector<ValidationIssue> validate(const Netlist& n) {
  std::vector<ValidationIssue> issues;
  validate_into(n, "", issues);
  return issues;
}

std::string to_string(const CostReport& c) {
  std::string s = std::to_string(c.transistors) + "T" + std::to_string(c.memristors) + "M";
  if (c.behavioral_primitives > 0)
    s += "+" + std::to_string(c.behavioral_primitives) + "B";
  return s;
}

namespace {

void count_into(const Netlist& n, CostReport& r) {
  for (const Component& c : n.components) {
    if (std::holds_alternative<Memristor>(c))
      ++r.memristors;
    else if (std::holds_alternative<Transistor>(c))
      ++r.transistors;
    else if (std::holds_alternative<BehavioralGate>(c))
      ++r.behavioral_primitives;
  }
  for (const Instance& inst : n.children)
    if (inst.def)
      count_into(*inst.def, r);
}

} // namespace

CostReport count(const Netlist& n) {
  auto issues = validate(n);
  if (!issues.empty())
    throw build_error("cannot count invalid netlist '" + n.name +
                      "': " + issues.front().message);
  CostReport r;
  count_into(n, r);
  return r;
}

namespace {

struct Flattener {
  Netlist out;
  int depth = 0;

  NetId fresh_net(const std::string& base) {
    // Path-qualified names are already unique; the suffix handles collisions.
    std::string name = base;
    int suffix = 1;
    while (out.find_net(name).valid())
      name = base + "~" + std::to_string(++suffix);
    return out.add_net(std::move(name));
  }

  // Maps a netlist's nets onto output nets: ports take the caller's binding,
  // rails merge into the canonical rail nets, the rest get fresh names.
  std::vector<NetId> map_nets(const Netlist& n, const std::string& path,
                              const std::map<std::string, NetId>& bound_ports) {
    std::vector<NetId> local(n.nets.size());
    std::vector<bool> mapped(n.nets.size(), false);
    for (const Port& p : n.ports) {
      auto it = bound_ports.find(p.name);
      if (it == bound_ports.end())
        throw build_error("instance '" + path + "' leaves port '" + p.name + "' unbound");
      if (!p.net.valid() || p.net.value >= n.nets.size())
        throw build_error("port '" + p.name + "' of '" + n.name + "' binds a missing net");
      local[p.net.value] = it->second;
      mapped[p.net.value] = true;
    }
    for (std::size_t i = 0; i < n.nets.size(); ++i) {
      if (mapped[i])
        continue;
      if (n.nets[i].rail)
        local[i] = out.rail(*n.nets[i].rail);
      else
        local[i] = fresh_net(path.empty() ? n.nets[i].name : path + "/" + n.nets[i].name);
    }
    return local;
  }

  void emit(const Netlist& n, const std::string& path, const std::vector<NetId>& local) {
    if (++depth > 64)
      throw build_error("netlist hierarchy too deep (cycle?)");

    auto remap = [&](NetId id) {
      if (!id.valid() || id.value >= local.size())
        throw build_error("component in '" + n.name + "' references a missing net");
      return local[id.value];
    };

    std::vector<std::size_t> emitted;
    for (const Component& c : n.components) {
      Component copy = c;
      std::visit(
          [&](auto& comp) {
            using T = std::decay_t<decltype(comp)>;
            comp.name = path.empty() ? comp.name : path + "/" + comp.name;
            if constexpr (std::is_same_v<T, Memristor>) {
              comp.plus = remap(comp.plus);
              comp.minus = remap(comp.minus);
            } else if constexpr (std::is_same_v<T, Transistor>) {
              comp.gate = remap(comp.gate);
              comp.drain = remap(comp.drain);
              comp.source = remap(comp.source);
            } else if constexpr (std::is_same_v<T, BehavioralGate>) {
              for (NetId& in : comp.inputs)
                in = remap(in);
              comp.output = remap(comp.output);
            } else {
              comp.net = remap(comp.net);
            }
          },
          copy);
      out.components.push_back(std::move(copy));
      emitted.push_back(out.components.size() - 1);
    }

    if (n.cell) {
      if (!n.children.empty())
        throw build_error("cell netlist '" + n.name + "' must be a leaf");
      CellInstance ci;
      ci.tag = *n.cell;
      ci.path = path.empty() ? n.name : path;
      for (const Port& p : n.ports)
        (p.dir == PortDir::in ? ci.inputs : ci.outputs).push_back(remap(p.net));
      ci.component_indices = emitted;
      out.cells.push_back(std::move(ci));
    } else {
      // Pre-flattened cell records pass through with remapped nets.
      for (const CellInstance& ci : n.cells) {
        CellInstance copy = ci;
        copy.path = path.empty() ? ci.path : path + "/" + ci.path;
        for (NetId& id : copy.inputs)
          id = remap(id);
        for (NetId& id : copy.outputs)
          id = remap(id);
        // component_indices shift by however many components preceded this scope.
        for (std::size_t& idx : copy.component_indices) {
          if (idx >= emitted.size())
            throw build_error("corrupt cell record in '" + n.name + "'");
          idx = emitted[idx];
        }
        out.cells.push_back(std::move(copy));
      }
      for (const Instance& inst : n.children) {
        if (!inst.def)
          throw build_error("child '" + inst.name + "' of '" + n.name + "' has no definition");
        std::map<std::string, NetId> child_bound;
        for (const auto& [port, net] : inst.bindings)
          child_bound[port] = remap(net);
        const std::string child_path = path.empty() ? inst.name : path + "/" + inst.name;
        emit(*inst.def, child_path, map_nets(*inst.def, child_path, child_bound));
      }
    }
    --depth;
  }
};

} // namespace

Netlist flatten(const Netlist& n) {
  Flattener f;
  f.out.name = n.name;

  // Root nets are created up front in declaration order so a flat netlist
  // flattens to itself.
  std::vector<NetId> root_local(n.nets.size());
  for (std::size_t i = 0; i < n.nets.size(); ++i)
    root_local[i] = n.nets[i].rail ? f.out.rail(*n.nets[i].rail) : f.out.add_net(n.nets[i].name);

  f.emit(n, "", root_local);

  for (const Port& p : n.ports) {
    if (!p.net.valid() || p.net.value >= root_local.size())
      throw build_error("port '" + p.name + "' of '" + n.name + "' binds a missing net");
    f.out.add_port(p.name, p.dir, root_local[p.net.value]);
  }
  return f.out;
}

std::size_t loose_device_count(const Netlist& flat) {
  std::vector<bool> owned(flat.components.size(), false);
  for (const CellInstance& ci : flat.cells)
    for (std::size_t idx : ci.component_indices)
      if (idx < owned.size())
        owned[idx] = true;
  std::size_t loose = 0;
  for (std::size_t i = 0; i < flat.components.size(); ++i) {
    if (owned[i])
      continue;
    if (std::holds_alternative<Memristor>(flat.components[i]) ||
        std::holds_alternative<Transistor>(flat.components[i]))
      ++loose;
  }
  return loose;
}

} // namespace bt

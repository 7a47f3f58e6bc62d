#include "btlogic/netlist_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace bt {
namespace {

std::string fmt_vth(double v) {
  char buf[48];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v)
      break;
  }
  return buf;
}

int type_rank(const Component& c) {
  if (std::holds_alternative<Memristor>(c)) return 0;
  if (std::holds_alternative<Transistor>(c)) return 1;
  if (std::holds_alternative<BehavioralGate>(c)) return 2;
  return 3;
}

std::string comp_name(const Component& c) {
  return std::visit([](const auto& x) { return x.name; }, c);
}

// ---------------------------------------------------------------- writing

void write_block(const Netlist& n, const std::string& def_name,
                 const std::map<const Netlist*, std::string>& def_names, std::string& out) {
  out += "netlist " + def_name;
  if (n.cell) {
    out += std::string(" cell=") + cell_name(n.cell->kind);
    if (n.cell->kind == CellKind::tmin || n.cell->kind == CellKind::tmax)
      out += " k=" + std::to_string(n.cell->k);
  }
  out += "\n";

  out += "nets:\n";
  for (const Net& net : n.nets) {
    out += "  " + net.name;
    if (net.rail)
      out += std::string(" rail=") + (*net.rail == Rail::vdd ? "vdd"
                                      : *net.rail == Rail::gnd ? "gnd"
                                                               : "vneg");
    out += "\n";
  }

  out += "ports:\n";
  for (const Port& p : n.ports)
    out += std::string("  ") + (p.dir == PortDir::in ? "in " : "out ") + p.name + " " +
           n.nets.at(p.net.value).name + "\n";

  std::vector<const Component*> sorted;
  sorted.reserve(n.components.size());
  for (const Component& c : n.components)
    sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Component* a, const Component* b) {
    if (type_rank(*a) != type_rank(*b))
      return type_rank(*a) < type_rank(*b);
    return comp_name(*a) < comp_name(*b);
  });

  auto net_of = [&](NetId id) -> const std::string& { return n.nets.at(id.value).name; };

  out += "components:\n";
  for (const Component* c : sorted) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Memristor>) {
            out += "  memristor " + x.name + " plus=" + net_of(x.plus) +
                   " minus=" + net_of(x.minus) +
                   " state=" + (x.initial_state == MemState::lrs ? "lrs" : "hrs") + "\n";
          } else if constexpr (std::is_same_v<T, Transistor>) {
            out += "  transistor " + x.name +
                   " kind=" + (x.kind == SwitchKind::nmos ? "nmos" : "pmos") +
                   " vth=" + fmt_vth(x.v_th) + " gate=" + net_of(x.gate) +
                   " drain=" + net_of(x.drain) + " source=" + net_of(x.source) + "\n";
          } else if constexpr (std::is_same_v<T, BehavioralGate>) {
            out += "  behavioral " + x.name + " kind=" + behavioral_name(x.kind) + " in=";
            for (std::size_t i = 0; i < x.inputs.size(); ++i)
              out += (i ? "," : "") + net_of(x.inputs[i]);
            out += " out=" + net_of(x.output) + "\n";
          } else {
            out += "  railtie " + x.name + " net=" + net_of(x.net) +
                   " level=" + trit_name(x.level) + "\n";
          }
        },
        *c);
  }

  out += "children:\n";
  for (const Instance& inst : n.children) {
    out += "  " + inst.name + " " + def_names.at(inst.def.get());
    auto bindings = inst.bindings;
    std::stable_sort(bindings.begin(), bindings.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [port, net] : bindings)
      out += " " + port + "=" + net_of(net);
    out += "\n";
  }
  out += "end\n";
}

void collect_defs(const Netlist& n, std::vector<const Netlist*>& order,
                  std::map<const Netlist*, std::string>& names,
                  std::map<std::string, const Netlist*>& by_name);

std::string block_signature(const Netlist& n,
                            std::map<const Netlist*, std::string>& names) {
  std::string sig;
  write_block(n, "_", names, sig);
  return sig;
}

void collect_defs(const Netlist& n, std::vector<const Netlist*>& order,
                  std::map<const Netlist*, std::string>& names,
                  std::map<std::string, const Netlist*>& by_name) {
  for (const Instance& inst : n.children) {
    if (!inst.def)
      throw build_error("child '" + inst.name + "' has no definition");
    const Netlist* def = inst.def.get();
    if (names.count(def))
      continue;
    collect_defs(*def, order, names, by_name);
    // Dedup by name; distinct structures under one name get a suffix.
    std::string base = def->name.empty() ? "cell" : def->name;
    std::string candidate = base;
    int suffix = 1;
    while (true) {
      auto it = by_name.find(candidate);
      if (it == by_name.end())
        break;
      if (block_signature(*it->second, names) == block_signature(*def, names)) {
        names[def] = candidate; // structurally identical, reuse
        break;
      }
      candidate = base + "~" + std::to_string(++suffix);
    }
    if (names.count(def))
      continue;
    names[def] = candidate;
    by_name[candidate] = def;
    order.push_back(def);
  }
}

// ---------------------------------------------------------------- reading

struct Reader {
  std::vector<std::string> lines;
  std::string origin;
  std::size_t pos = 0;

  [[noreturn]] void fail(std::size_t line, const std::string& msg) const {
    throw parse_error(origin + ":" + std::to_string(line + 1) + ": " + msg);
  }
};

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t.starts_with('#'))
      break;
    toks.push_back(t);
  }
  return toks;
}

// key=value attribute lookup within a token list
std::map<std::string, std::string> attributes(const std::vector<std::string>& toks,
                                              std::size_t from, Reader& r, std::size_t line) {
  std::map<std::string, std::string> attrs;
  for (std::size_t i = from; i < toks.size(); ++i) {
    auto eq = toks[i].find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 > toks[i].size())
      r.fail(line, "expected key=value, got '" + toks[i] + "'");
    attrs[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
  }
  return attrs;
}

Netlist parse_block(Reader& r, const std::vector<std::string>& header, std::size_t header_line,
                    std::map<std::string, std::shared_ptr<const Netlist>>& defs) {
  Netlist n;
  n.name = header.at(1);
  auto attrs = attributes(header, 2, r, header_line);
  if (auto it = attrs.find("cell"); it != attrs.end()) {
    auto kind = parse_cell(it->second);
    if (!kind)
      r.fail(header_line, "unknown cell kind '" + it->second + "'");
    CellTag tag{*kind, 1};
    if (auto kk = attrs.find("k"); kk != attrs.end())
      tag.k = std::stoi(kk->second);
    else if (*kind == CellKind::dec13_y0)
      tag.k = 2;
    n.cell = tag;
  }

  enum class Section { none, nets, ports, components, children };
  Section section = Section::none;
  bool saw_nets = false, saw_ports = false;

  auto need_net = [&](const std::string& name, std::size_t line) {
    NetId id = n.find_net(name);
    if (!id.valid())
      r.fail(line, "unknown net '" + name + "' in netlist " + n.name);
    return id;
  };

  while (r.pos < r.lines.size()) {
    const std::size_t line = r.pos;
    auto toks = tokenize(r.lines[r.pos]);
    ++r.pos;
    if (toks.empty())
      continue;
    const std::string& head = toks[0];
    if (head == "end") {
      if (!saw_nets)
        r.fail(header_line, "netlist " + n.name + " is missing required section 'nets'");
      if (!saw_ports)
        r.fail(header_line, "netlist " + n.name + " is missing required section 'ports'");
      return n;
    }
    if (head == "nets:") { section = Section::nets; saw_nets = true; continue; }
    if (head == "ports:") { section = Section::ports; saw_ports = true; continue; }
    if (head == "components:") { section = Section::components; continue; }
    if (head == "children:") { section = Section::children; continue; }

    switch (section) {
    case Section::none:
      r.fail(line, "expected a section header before '" + head + "'");
    case Section::nets: {
      NetId id = n.add_net(head);
      auto a = attributes(toks, 1, r, line);
      if (auto it = a.find("rail"); it != a.end()) {
        auto rail = parse_rail(it->second);
        if (!rail)
          r.fail(line, "unknown rail '" + it->second + "'");
        n.nets[id.value].rail = *rail; // duplicates are validate()'s business
      }
      break;
    }
    case Section::ports: {
      if (toks.size() != 3)
        r.fail(line, "expected 'in|out <name> <net>'");
      PortDir dir;
      if (toks[0] == "in") dir = PortDir::in;
      else if (toks[0] == "out") dir = PortDir::out;
      else r.fail(line, "port direction must be 'in' or 'out'");
      n.add_port(toks[1], dir, need_net(toks[2], line));
      break;
    }
    case Section::components: {
      if (toks.size() < 2)
        r.fail(line, "component line needs a type and a name");
      const std::string& type = toks[0];
      const std::string& name = toks[1];
      auto a = attributes(toks, 2, r, line);
      auto attr = [&](const char* key) -> const std::string& {
        auto it = a.find(key);
        if (it == a.end())
          r.fail(line, std::string("component ") + name + " is missing '" + key + "='");
        return it->second;
      };
      if (type == "memristor") {
        Memristor m;
        m.name = name;
        m.plus = need_net(attr("plus"), line);
        m.minus = need_net(attr("minus"), line);
        if (auto it = a.find("state"); it != a.end()) {
          if (it->second == "lrs") m.initial_state = MemState::lrs;
          else if (it->second == "hrs") m.initial_state = MemState::hrs;
          else r.fail(line, "memristor state must be hrs or lrs");
        }
        n.components.emplace_back(std::move(m));
      } else if (type == "transistor") {
        Transistor t;
        t.name = name;
        const std::string& kind = attr("kind");
        if (kind == "nmos") t.kind = SwitchKind::nmos;
        else if (kind == "pmos") t.kind = SwitchKind::pmos;
        else r.fail(line, "transistor kind must be nmos or pmos");
        try {
          t.v_th = std::stod(attr("vth"));
        } catch (const std::exception&) {
          r.fail(line, "bad vth value");
        }
        t.gate = need_net(attr("gate"), line);
        t.drain = need_net(attr("drain"), line);
        t.source = need_net(attr("source"), line);
        n.components.emplace_back(std::move(t));
      } else if (type == "behavioral") {
        BehavioralGate b;
        b.name = name;
        auto kind = parse_behavioral(attr("kind"));
        if (!kind)
          r.fail(line, "unknown behavioral kind");
        b.kind = *kind;
        std::istringstream ins(attr("in"));
        std::string item;
        while (std::getline(ins, item, ','))
          b.inputs.push_back(need_net(item, line));
        b.output = need_net(attr("out"), line);
        n.components.emplace_back(std::move(b));
      } else if (type == "railtie") {
        RailTie tie;
        tie.name = name;
        tie.net = need_net(attr("net"), line);
        auto level = parse_trit(attr("level"));
        if (!level)
          r.fail(line, "railtie level must be -1, 0 or 1");
        tie.level = *level;
        n.components.emplace_back(std::move(tie));
      } else {
        r.fail(line, "unknown component type '" + type + "'");
      }
      break;
    }
    case Section::children: {
      if (toks.size() < 2)
        r.fail(line, "child line needs an instance name and a definition name");
      auto def = defs.find(toks[1]);
      if (def == defs.end())
        r.fail(line, "unknown netlist '" + toks[1] + "' (definitions must precede use)");
      Instance inst;
      inst.name = toks[0];
      inst.def = def->second;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos || eq == 0)
          r.fail(line, "expected port=net, got '" + toks[i] + "'");
        inst.bindings.emplace_back(toks[i].substr(0, eq),
                                   need_net(toks[i].substr(eq + 1), line));
      }
      n.children.push_back(std::move(inst));
      break;
    }
    }
  }
  r.fail(header_line, "netlist " + n.name + " has no 'end'");
}

} // namespace

std::string write_netlist_string(const Netlist& n) {
  std::vector<const Netlist*> order;
  std::map<const Netlist*, std::string> names;
  std::map<std::string, const Netlist*> by_name;
  collect_defs(n, order, names, by_name);

  std::string top_name = n.name.empty() ? "top" : n.name;
  if (by_name.count(top_name) && by_name[top_name] != &n)
    top_name += "~top";
  names[&n] = top_name;

  std::string out = "btnl 1\n";
  for (const Netlist* def : order)
    write_block(*def, names.at(def), names, out);
  write_block(n, top_name, names, out);
  out += "top " + top_name + "\n";
  return out;
}

void write_netlist(const Netlist& n, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw parse_error("cannot write netlist file " + path.string());
  out << write_netlist_string(n);
}

Netlist read_netlist_string(std::string_view text, std::string_view origin) {
  Reader r;
  r.origin = std::string(origin);
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line))
      r.lines.push_back(line);
  }
  if (r.lines.empty())
    throw parse_error(r.origin + ": empty netlist file");

  auto magic = tokenize(r.lines[0]);
  if (magic.size() != 2 || magic[0] != "btnl")
    r.fail(0, "expected 'btnl 1' header");
  if (magic[1] != "1")
    r.fail(0, "unsupported netlist format version " + magic[1]);
  r.pos = 1;

  std::map<std::string, std::shared_ptr<const Netlist>> defs;
  std::string top_name;
  while (r.pos < r.lines.size()) {
    const std::size_t line = r.pos;
    auto toks = tokenize(r.lines[r.pos]);
    ++r.pos;
    if (toks.empty())
      continue;
    if (toks[0] == "netlist") {
      if (toks.size() < 2)
        r.fail(line, "netlist block needs a name");
      if (defs.count(toks[1]))
        r.fail(line, "netlist '" + toks[1] + "' is defined twice");
      Netlist block = parse_block(r, toks, line, defs);
      defs[toks[1]] = std::make_shared<const Netlist>(std::move(block));
    } else if (toks[0] == "top") {
      if (toks.size() != 2)
        r.fail(line, "top line needs exactly one name");
      top_name = toks[1];
    } else {
      r.fail(line, "expected 'netlist' or 'top', got '" + toks[0] + "'");
    }
  }
  if (top_name.empty())
    throw parse_error(r.origin + ": missing 'top <name>' line");
  auto it = defs.find(top_name);
  if (it == defs.end())
    throw parse_error(r.origin + ": top netlist '" + top_name + "' is not defined");
  return *it->second;
}

Netlist read_netlist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open netlist file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_netlist_string(buf.str(), path.string());
}

bool structurally_equal(const Netlist& a, const Netlist& b) {
  return write_netlist_string(a) == write_netlist_string(b);
}

} // namespace bt

#include "btlogic/gates.hpp"

#include <algorithm>
#include <memory>

#include "btlogic/synthesis.hpp"

namespace bt {

namespace {

constexpr double kVthLow = 0.8;  // 0 < vth < VDD
constexpr double kVthHigh = 1.5; // VDD < vth < 2*VDD

std::vector<std::string> numbered(const char* prefix, int from, int count, int step = 1) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i)
    names.push_back(prefix + std::to_string(from + i * step));
  return names;
}

// Line names for decoder-style outputs over values -k..k: YM2, YM1, Y0, Y1, Y2.
std::string level_name(const char* prefix, int value) {
  if (value < 0)
    return std::string(prefix) + "M" + std::to_string(-value);
  return std::string(prefix) + std::to_string(value);
}

} // namespace

int GateKind::num_inputs() const {
  switch (tag) {
  case Tag::tmin:
  case Tag::tmax: return k;
  case Tag::sti:
  case Tag::pti:
  case Tag::nti:
  case Tag::dec13: return 1;
  case Tag::enc31: return 3;
  case Tag::enc92: return 9;
  case Tag::dec29:
  case Tag::tha:
  case Tag::mul:
  case Tag::mle: return 2;
  case Tag::mux3: return 4;
  }
  return 0;
}

int GateKind::num_outputs() const {
  switch (tag) {
  case Tag::dec13: return 3;
  case Tag::dec29: return 9;
  case Tag::enc92:
  case Tag::tha: return 2;
  default: return 1;
  }
}

std::vector<std::string> GateKind::input_names() const {
  switch (tag) {
  case Tag::tmin:
  case Tag::tmax: return numbered("IN", 1, k);
  case Tag::sti:
  case Tag::pti:
  case Tag::nti: return {"A"};
  case Tag::enc31: return {"X1", "X0", "XM1"};
  case Tag::enc92: {
    std::vector<std::string> names;
    for (int v = 4; v >= -4; --v)
      names.push_back(level_name("X", v));
    return names;
  }
  case Tag::dec13: return {"IN"};
  case Tag::dec29: return {"A", "B"};
  case Tag::mux3: return {"S", "IM1", "I0", "I1"};
  case Tag::tha:
  case Tag::mul:
  case Tag::mle: return {"A", "B"};
  }
  return {};
}

std::vector<std::string> GateKind::output_names() const {
  switch (tag) {
  case Tag::dec13: return {"YM1", "Y0", "Y1"};
  case Tag::dec29: {
    std::vector<std::string> names;
    for (int v = -4; v <= 4; ++v)
      names.push_back(level_name("Y", v));
    return names;
  }
  case Tag::enc92: return {"Y1", "Y0"};
  case Tag::enc31: return {"Y"};
  case Tag::tha: return {"S", "C"};
  default: return {"OUT"};
  }
}

std::string GateKind::canonical_name() const {
  switch (tag) {
  case Tag::tmin: return "tmin" + std::to_string(k);
  case Tag::tmax: return "tmax" + std::to_string(k);
  case Tag::sti: return "sti";
  case Tag::pti: return "pti";
  case Tag::nti: return "nti";
  case Tag::enc31: return "enc31";
  case Tag::enc92: return "enc92";
  case Tag::dec13: return "dec13";
  case Tag::dec29: return "dec29";
  case Tag::mux3: return "mux3";
  case Tag::tha: return "tha";
  case Tag::mul: return "mul";
  case Tag::mle: return "mle";
  }
  return {};
}

std::optional<GateKind> GateKind::parse(std::string_view name) {
  using Tag = GateKind::Tag;
  static const std::pair<std::string_view, Tag> fixed[] = {
      {"sti", Tag::sti},     {"pti", Tag::pti},     {"nti", Tag::nti},
      {"enc31", Tag::enc31}, {"enc92", Tag::enc92}, {"dec13", Tag::dec13},
      {"dec29", Tag::dec29}, {"mux3", Tag::mux3},   {"tha", Tag::tha},
      {"mul", Tag::mul},     {"mle", Tag::mle},
  };
  for (auto [n, tag] : fixed)
    if (name == n)
      return GateKind{tag, 2};
  for (auto [prefix, tag] : {std::pair<std::string_view, Tag>{"tmin", Tag::tmin},
                             std::pair<std::string_view, Tag>{"tmax", Tag::tmax}}) {
    if (name.starts_with(prefix) && name.size() == prefix.size() + 1) {
      char c = name.back();
      if (c >= '2' && c <= '9')
        return GateKind{tag, c - '0'};
    }
  }
  return std::nullopt;
}

// --------------------------------------------------------------- behavioral

namespace {

void require_arity(const GateKind& kind, std::span<const Trit> inputs) {
  if (static_cast<int>(inputs.size()) != kind.num_inputs())
    throw arity_error(kind.canonical_name() + " expects " +
                      std::to_string(kind.num_inputs()) + " inputs, got " +
                      std::to_string(inputs.size()));
}

/// Index of the single +1 in a one-hot pattern; everything else must be -1.
std::size_t onehot_index(const GateKind& kind, std::span<const Trit> inputs) {
  std::size_t hot = inputs.size();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i] == Trit::P) {
      if (hot != inputs.size())
        throw precondition_error(kind.canonical_name() +
                                 ": more than one encoder input is high");
      hot = i;
    } else if (inputs[i] != Trit::N) {
      throw precondition_error(kind.canonical_name() +
                               ": encoder inputs must be -1 or 1");
    }
  }
  if (hot == inputs.size())
    throw precondition_error(kind.canonical_name() + ": no encoder input is high");
  return hot;
}

} // namespace

std::vector<Trit> behavioral_eval(const GateKind& kind, std::span<const Trit> inputs) {
  using Tag = GateKind::Tag;
  require_arity(kind, inputs);
  switch (kind.tag) {
  case Tag::tmin: return {tmin_n(inputs)};
  case Tag::tmax: return {tmax_n(inputs)};
  case Tag::sti: return {sti(inputs[0])};
  case Tag::pti: return {pti(inputs[0])};
  case Tag::nti: return {nti(inputs[0])};
  case Tag::enc31: {
    // Input order X1, X0, XM1 encodes values 1, 0, -1.
    std::size_t hot = onehot_index(kind, inputs);
    return {static_cast<Trit>(1 - static_cast<int>(hot))};
  }
  case Tag::enc92: {
    // Input order X4..XM4 encodes values 4 down to -4; output is the
    // two-trit balanced code (Y1 high order, Y0 low order).
    std::size_t hot = onehot_index(kind, inputs);
    int value = 4 - static_cast<int>(hot);
    int shifted = value + 4; // 0..8 = 3*(y1+1) + (y0+1)
    return {static_cast<Trit>(shifted / 3 - 1), static_cast<Trit>(shifted % 3 - 1)};
  }
  case Tag::dec13: {
    std::vector<Trit> out(3, Trit::N);
    out[static_cast<std::size_t>(to_int(inputs[0]) + 1)] = Trit::P;
    return out;
  }
  case Tag::dec29: {
    std::vector<Trit> out(9, Trit::N);
    int value = 3 * to_int(inputs[0]) + to_int(inputs[1]);
    out[static_cast<std::size_t>(value + 4)] = Trit::P;
    return out;
  }
  case Tag::mux3: {
    // inputs: S, IM1, I0, I1 -> OUT = I_S
    return {inputs[static_cast<std::size_t>(to_int(inputs[0]) + 2)]};
  }
  case Tag::tha: {
    int sum = to_int(inputs[0]) + to_int(inputs[1]);
    int carry = 0;
    if (sum > 1) { carry = 1; sum -= 3; }
    if (sum < -1) { carry = -1; sum += 3; }
    return {static_cast<Trit>(sum), static_cast<Trit>(carry)};
  }
  case Tag::mul: return {static_cast<Trit>(to_int(inputs[0]) * to_int(inputs[1]))};
  case Tag::mle: {
    int d = to_int(inputs[0]) - to_int(inputs[1]);
    return {static_cast<Trit>((d > 0) - (d < 0))};
  }
  }
  throw build_error("unhandled gate kind");
}

TruthTable behavioral_table(const GateKind& kind) {
  if (kind.is_encoder())
    throw precondition_error(kind.canonical_name() +
                             " has no complete table; its domain is one-hot only");
  return make_table(kind.num_inputs(), kind.num_outputs(),
                    [&](std::span<const Trit> in) { return behavioral_eval(kind, in); });
}

std::vector<OneHotRow> encoder_rows(const GateKind& kind) {
  if (!kind.is_encoder())
    throw precondition_error(kind.canonical_name() + " is not an encoder");
  const int n = kind.num_inputs();
  std::vector<OneHotRow> rows;
  // Inputs are ordered highest encoded value first, so walking the hot
  // position backwards lists the rows lowest value first, as the tables do.
  for (int hot = n - 1; hot >= 0; --hot) {
    OneHotRow row;
    row.inputs.assign(static_cast<std::size_t>(n), Trit::N);
    row.inputs[static_cast<std::size_t>(hot)] = Trit::P;
    row.outputs = behavioral_eval(kind, row.inputs);
    rows.push_back(std::move(row));
  }
  return rows;
}

// --------------------------------------------------------------- leaf cells

Netlist make_tmin_cell(int k) {
  if (k < 2)
    throw build_error("tmin needs at least 2 inputs");
  Netlist n;
  n.name = "tmin" + std::to_string(k);
  n.cell = CellTag{CellKind::tmin, k};
  NetId out = n.add_net("OUT");
  for (int i = 1; i <= k; ++i) {
    NetId in = n.add_net("IN" + std::to_string(i));
    n.add_port("IN" + std::to_string(i), PortDir::in, in);
    // Top electrodes joined at the output.
    n.components.emplace_back(Memristor{"m" + std::to_string(i), out, in});
  }
  n.add_port("OUT", PortDir::out, out);
  return n;
}

Netlist make_tmax_cell(int k) {
  if (k < 2)
    throw build_error("tmax needs at least 2 inputs");
  Netlist n;
  n.name = "tmax" + std::to_string(k);
  n.cell = CellTag{CellKind::tmax, k};
  NetId out = n.add_net("OUT");
  for (int i = 1; i <= k; ++i) {
    NetId in = n.add_net("IN" + std::to_string(i));
    n.add_port("IN" + std::to_string(i), PortDir::in, in);
    // Bottom electrodes joined at the output.
    n.components.emplace_back(Memristor{"m" + std::to_string(i), in, out});
  }
  n.add_port("OUT", PortDir::out, out);
  return n;
}

Netlist make_sti_cell() {
  Netlist n;
  n.name = "sti";
  n.cell = CellTag{CellKind::sti, 1};
  NetId in = n.add_net("A");
  NetId out = n.add_net("OUT");
  NetId x = n.add_net("x");
  NetId vdd = n.rail(Rail::vdd);
  NetId vneg = n.rail(Rail::vneg);
  // Symmetric divider: with T1 on, M1 (to VDD) and M2+T1 (to -VDD) both set
  // and the output lands next to 0 V; T2 overrides to -VDD at input +1.
  n.components.emplace_back(Memristor{"m1", vdd, out});
  n.components.emplace_back(Memristor{"m2", out, x});
  n.components.emplace_back(Transistor{"t1", SwitchKind::nmos, kVthLow, in, x, vneg});
  n.components.emplace_back(Transistor{"t2", SwitchKind::nmos, kVthHigh, in, out, vneg});
  n.add_port("A", PortDir::in, in);
  n.add_port("OUT", PortDir::out, out);
  return n;
}

namespace {

Netlist make_inverter_cell(const char* name, CellKind kind, double vth) {
  Netlist n;
  n.name = name;
  n.cell = CellTag{kind, 1};
  NetId in = n.add_net("A");
  NetId out = n.add_net("OUT");
  NetId vdd = n.rail(Rail::vdd);
  NetId vneg = n.rail(Rail::vneg);
  n.components.emplace_back(Memristor{"m1", out, vdd});
  n.components.emplace_back(Transistor{"t1", SwitchKind::nmos, vth, in, out, vneg});
  n.add_port("A", PortDir::in, in);
  n.add_port("OUT", PortDir::out, out);
  return n;
}

} // namespace

Netlist make_pti_cell() { return make_inverter_cell("pti", CellKind::pti, kVthHigh); }
Netlist make_nti_cell() { return make_inverter_cell("nti", CellKind::nti, kVthLow); }

Netlist make_dec13_y0_cell() {
  Netlist n;
  n.name = "dec13_y0";
  n.cell = CellTag{CellKind::dec13_y0, 2};
  NetId in = n.add_net("IN");
  NetId ym1 = n.add_net("YM1"); // the decoder's own NTI output gates T3
  NetId out = n.add_net("OUT");
  NetId j = n.add_net("j");
  NetId vdd = n.rail(Rail::vdd);
  NetId vneg = n.rail(Rail::vneg);
  // Input -1: T3 conducts, M1/M2 form a TMIN of (-1, 1) -> output -1.
  // Input 0: both switches off, output pulled to VDD through M2.
  // Input 1: T2 conducts, output connected to -VDD through it.
  n.components.emplace_back(Memristor{"m1", out, j});
  n.components.emplace_back(Memristor{"m2", out, vdd});
  n.components.emplace_back(Transistor{"t2", SwitchKind::nmos, kVthHigh, in, out, vneg});
  n.components.emplace_back(Transistor{"t3", SwitchKind::nmos, kVthHigh, ym1, j, vneg});
  n.add_port("IN", PortDir::in, in);
  n.add_port("YM1", PortDir::in, ym1);
  n.add_port("OUT", PortDir::out, out);
  return n;
}

// ----------------------------------------------------------- gate builders

Netlist make_dec13() {
  Netlist n;
  n.name = "dec13";
  NetId in = n.add_net("IN");
  NetId ym1 = n.add_net("YM1");
  NetId y0 = n.add_net("Y0");
  NetId y1 = n.add_net("Y1");
  NetId p = n.add_net("p");

  auto nti_def = std::make_shared<const Netlist>(make_nti_cell());
  auto pti_def = std::make_shared<const Netlist>(make_pti_cell());
  auto y0_def = std::make_shared<const Netlist>(make_dec13_y0_cell());

  auto& u1 = n.add_child("nti_m1", nti_def);
  n.bind(u1, "A", in);
  n.bind(u1, "OUT", ym1);
  auto& u2 = n.add_child("pti_1", pti_def);
  n.bind(u2, "A", in);
  n.bind(u2, "OUT", p);
  auto& u3 = n.add_child("nti_1", nti_def);
  n.bind(u3, "A", p);
  n.bind(u3, "OUT", y1);
  auto& u4 = n.add_child("y0_branch", y0_def);
  n.bind(u4, "IN", in);
  n.bind(u4, "YM1", ym1);
  n.bind(u4, "OUT", y0);

  n.add_port("IN", PortDir::in, in);
  n.add_port("YM1", PortDir::out, ym1);
  n.add_port("Y0", PortDir::out, y0);
  n.add_port("Y1", PortDir::out, y1);
  return n;
}

Netlist make_dec29() {
  Netlist n;
  n.name = "dec29";
  NetId a = n.add_net("A");
  NetId b = n.add_net("B");

  auto dec_def = std::make_shared<const Netlist>(make_dec13());
  auto tmin_def = std::make_shared<const Netlist>(make_tmin_cell(2));

  const char* line_names[3] = {"YM1", "Y0", "Y1"};
  NetId a_lines[3], b_lines[3];
  for (int i = 0; i < 3; ++i) {
    a_lines[i] = n.add_net(std::string("a_") + line_names[i]);
    b_lines[i] = n.add_net(std::string("b_") + line_names[i]);
  }
  auto& da = n.add_child("dec_a", dec_def);
  n.bind(da, "IN", a);
  auto& db = n.add_child("dec_b", dec_def);
  n.bind(db, "IN", b);
  for (int i = 0; i < 3; ++i) {
    n.bind(n.children[0], line_names[i], a_lines[i]);
    n.bind(n.children[1], line_names[i], b_lines[i]);
  }

  n.add_port("A", PortDir::in, a);
  n.add_port("B", PortDir::in, b);
  // Y_{3a+b} = A_a . B_b
  for (int va = -1; va <= 1; ++va) {
    for (int vb = -1; vb <= 1; ++vb) {
      const int value = 3 * va + vb;
      NetId y = n.add_net(level_name("Y", value));
      auto& g = n.add_child("min_" + level_name("y", value), tmin_def);
      n.bind(g, "IN1", a_lines[va + 1]);
      n.bind(g, "IN2", b_lines[vb + 1]);
      n.bind(g, "OUT", y);
    }
  }
  for (int value = -4; value <= 4; ++value)
    n.add_port(level_name("Y", value), PortDir::out, n.find_net(level_name("Y", value)));
  return n;
}

Netlist make_mux3() {
  Netlist n;
  n.name = "mux3";
  NetId s = n.add_net("S");
  NetId im1 = n.add_net("IM1");
  NetId i0 = n.add_net("I0");
  NetId i1 = n.add_net("I1");
  NetId out = n.add_net("OUT");
  NetId sm1 = n.add_net("s_m1");
  NetId s0 = n.add_net("s_0");
  NetId s1 = n.add_net("s_1");
  NetId w[3] = {n.add_net("w_m1"), n.add_net("w_0"), n.add_net("w_1")};

  auto dec_def = std::make_shared<const Netlist>(make_dec13());
  auto tmin_def = std::make_shared<const Netlist>(make_tmin_cell(2));
  auto tmax_def = std::make_shared<const Netlist>(make_tmax_cell(3));

  auto& dec = n.add_child("dec_s", dec_def);
  n.bind(dec, "IN", s);
  n.bind(dec, "YM1", sm1);
  n.bind(dec, "Y0", s0);
  n.bind(dec, "Y1", s1);

  NetId lines[3] = {sm1, s0, s1};
  NetId data[3] = {im1, i0, i1};
  const char* names[3] = {"min_m1", "min_0", "min_1"};
  for (int i = 0; i < 3; ++i) {
    auto& g = n.add_child(names[i], tmin_def);
    n.bind(g, "IN1", lines[i]);
    n.bind(g, "IN2", data[i]);
    n.bind(g, "OUT", w[i]);
  }
  auto& m = n.add_child("max_out", tmax_def);
  n.bind(m, "IN1", w[0]);
  n.bind(m, "IN2", w[1]);
  n.bind(m, "IN3", w[2]);
  n.bind(m, "OUT", out);

  n.add_port("S", PortDir::in, s);
  n.add_port("IM1", PortDir::in, im1);
  n.add_port("I0", PortDir::in, i0);
  n.add_port("I1", PortDir::in, i1);
  n.add_port("OUT", PortDir::out, out);
  return n;
}

Netlist make_enc31() {
  // One-hot (X1, X0, XM1) -> Y. The subcircuit internals are behavioral;
  // the min/max stages are structural.
  Netlist n;
  n.name = "enc31";
  NetId x1 = n.add_net("X1");
  NetId x0 = n.add_net("X0");
  NetId xm1 = n.add_net("XM1");
  NetId y = n.add_net("Y");
  NetId s2o = n.add_net("sub2_out");
  NetId s1o = n.add_net("sub1_out");
  NetId tm = n.add_net("min_out");

  n.components.emplace_back(BehavioralGate{"sub2_1", BehavioralKind::sub2, {xm1}, s2o});
  n.components.emplace_back(BehavioralGate{"sub1_1", BehavioralKind::sub1, {xm1}, s1o});

  auto tmin_def = std::make_shared<const Netlist>(make_tmin_cell(2));
  auto tmax_def = std::make_shared<const Netlist>(make_tmax_cell(3));
  auto& g1 = n.add_child("min_1", tmin_def);
  n.bind(g1, "IN1", s2o);
  n.bind(g1, "IN2", x0);
  n.bind(g1, "OUT", tm);
  auto& g2 = n.add_child("max_1", tmax_def);
  n.bind(g2, "IN1", tm);
  n.bind(g2, "IN2", s1o);
  n.bind(g2, "IN3", x1);
  n.bind(g2, "OUT", y);

  n.add_port("X1", PortDir::in, x1);
  n.add_port("X0", PortDir::in, x0);
  n.add_port("XM1", PortDir::in, xm1);
  n.add_port("Y", PortDir::out, y);
  return n;
}

Netlist make_enc92() {
  // Y1 groups the inputs by encoded high trit, Y0 by encoded low trit; each
  // output is max(high-group, sub2(low-group)).
  Netlist n;
  n.name = "enc92";
  GateKind kind{GateKind::Tag::enc92, 2};
  std::vector<NetId> x;
  for (const std::string& name : kind.input_names())
    x.push_back(n.add_net(name));
  NetId y1 = n.add_net("Y1");
  NetId y0 = n.add_net("Y0");

  auto tmax3_def = std::make_shared<const Netlist>(make_tmax_cell(3));
  auto tmax2_def = std::make_shared<const Netlist>(make_tmax_cell(2));

  // Input index for encoded value v (inputs are ordered X4..XM4).
  auto xi = [&](int v) { return x[static_cast<std::size_t>(4 - v)]; };

  struct Group {
    const char* name;
    int a, b, c;   // encoded values whose group output is +1
    int na, nb, nc; // encoded values whose group output is -1 (via sub2)
    NetId out;
  };
  // Y1 = max(TMAX(X4,X3,X2), sub2(TMAX(XM2,XM3,XM4)))
  // Y0 = max(TMAX(X4,X1,XM2), sub2(TMAX(X2,XM1,XM4)))
  Group groups[2] = {
      {"y1", 4, 3, 2, -2, -3, -4, y1},
      {"y0", 4, 1, -2, 2, -1, -4, y0},
  };
  for (Group& g : groups) {
    NetId hi = n.add_net(std::string(g.name) + "_hi");
    NetId lo = n.add_net(std::string(g.name) + "_lo");
    NetId conv = n.add_net(std::string(g.name) + "_conv");
    auto& u1 = n.add_child(std::string(g.name) + "_hi_max", tmax3_def);
    n.bind(u1, "IN1", xi(g.a));
    n.bind(u1, "IN2", xi(g.b));
    n.bind(u1, "IN3", xi(g.c));
    n.bind(u1, "OUT", hi);
    auto& u2 = n.add_child(std::string(g.name) + "_lo_max", tmax3_def);
    n.bind(u2, "IN1", xi(g.na));
    n.bind(u2, "IN2", xi(g.nb));
    n.bind(u2, "IN3", xi(g.nc));
    n.bind(u2, "OUT", lo);
    n.components.emplace_back(
        BehavioralGate{std::string(g.name) + "_sub2", BehavioralKind::sub2, {lo}, conv});
    auto& u3 = n.add_child(std::string(g.name) + "_max", tmax2_def);
    n.bind(u3, "IN1", hi);
    n.bind(u3, "IN2", conv);
    n.bind(u3, "OUT", g.out);
  }

  for (std::size_t i = 0; i < x.size(); ++i)
    n.add_port(kind.input_names()[i], PortDir::in, x[i]);
  n.add_port("Y1", PortDir::out, y1);
  n.add_port("Y0", PortDir::out, y0);
  return n;
}

Netlist build_structural(const GateKind& kind, const BuildOptions& options) {
  using Tag = GateKind::Tag;
  switch (kind.tag) {
  case Tag::tmin: return make_tmin_cell(kind.k);
  case Tag::tmax: return make_tmax_cell(kind.k);
  case Tag::sti: return make_sti_cell();
  case Tag::pti: return make_pti_cell();
  case Tag::nti: return make_nti_cell();
  case Tag::dec13: return make_dec13();
  case Tag::dec29: return make_dec29();
  case Tag::mux3: return make_mux3();
  case Tag::enc31: return make_enc31();
  case Tag::enc92: return make_enc92();
  case Tag::tha:
  case Tag::mul:
  case Tag::mle: {
    TruthTable table = behavioral_table(kind);
    auto in_names = kind.input_names();
    auto out_names = kind.output_names();
    Netlist n;
    if (options.method == BuildOptions::Method::decoder)
      n = std::move(synth_decoder(table, in_names, out_names).netlist);
    else
      n = synth_mux(table, options.share_decoders, in_names, out_names);
    n.name = kind.canonical_name() +
             (options.method == BuildOptions::Method::decoder ? "-decoder" : "-mux");
    return n;
  }
  }
  throw build_error("unhandled gate kind");
}

namespace {

std::optional<std::pair<GateKind, BuildOptions>> parse_circuit(std::string_view name) {
  BuildOptions opts;
  std::string_view base = name;
  if (name.ends_with("-decoder")) {
    base = name.substr(0, name.size() - 8);
    opts.method = BuildOptions::Method::decoder;
  } else if (name.ends_with("-mux")) {
    base = name.substr(0, name.size() - 4);
    opts.method = BuildOptions::Method::mux;
  }
  auto kind = GateKind::parse(base);
  if (!kind)
    return std::nullopt;
  const bool combinational = kind->tag == GateKind::Tag::tha ||
                             kind->tag == GateKind::Tag::mul ||
                             kind->tag == GateKind::Tag::mle;
  if (base.size() != name.size() && !combinational)
    return std::nullopt; // method suffix only applies to tha/mul/mle
  return std::make_pair(*kind, opts);
}

} // namespace

Netlist build_named(std::string_view name) {
  auto parsed = parse_circuit(name);
  if (!parsed)
    throw build_error("unknown circuit name '" + std::string(name) + "'");
  return build_structural(parsed->first, parsed->second);
}

std::vector<std::string> known_circuit_names() {
  std::vector<std::string> names = {"sti",   "pti",   "nti",   "enc31", "enc92",
                                    "dec13", "dec29", "mux3"};
  for (int k = 2; k <= 9; ++k) {
    names.push_back("tmin" + std::to_string(k));
    names.push_back("tmax" + std::to_string(k));
  }
  for (const char* base : {"tha", "mul", "mle"}) {
    names.push_back(std::string(base) + "-decoder");
    names.push_back(std::string(base) + "-mux");
    names.push_back(base);
  }
  std::sort(names.begin(), names.end());
  return names;
}

} // namespace bt

#include "btlogic/synthesis.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>

namespace bt {

namespace {

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s)
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> resolve_names(std::span<const std::string> given, int n,
                                       bool variables) {
  std::vector<std::string> names;
  if (!given.empty()) {
    if (static_cast<int>(given.size()) != n)
      throw arity_error("name list does not match table arity");
    names.assign(given.begin(), given.end());
  } else {
    for (int i = 0; i < n; ++i)
      names.push_back(variables ? var_name(i) : "Y" + std::to_string(i));
  }
  return names;
}

/// Per-variable 1-3 decoder instances, created on demand and shared by
/// whoever selects or decodes that variable.
struct DecoderBank {
  Netlist& n;
  std::shared_ptr<const Netlist> dec_def = std::make_shared<const Netlist>(make_dec13());
  std::vector<std::string> in_names;
  std::vector<NetId> in_nets;
  std::map<int, std::array<NetId, 3>> lines; // var -> (m1, 0, 1) line nets

  explicit DecoderBank(Netlist& netlist) : n(netlist) {}

  NetId line(int var, Trit level) {
    auto it = lines.find(var);
    if (it == lines.end()) {
      const std::string base = lower(in_names[static_cast<std::size_t>(var)]);
      std::array<NetId, 3> l = {n.add_net(base + "_m1"), n.add_net(base + "_0"),
                                n.add_net(base + "_1")};
      Instance& dec = n.add_child("dec_" + base, dec_def);
      n.bind(dec, "IN", in_nets[static_cast<std::size_t>(var)]);
      n.bind(dec, "YM1", l[0]);
      n.bind(dec, "Y0", l[1]);
      n.bind(dec, "Y1", l[2]);
      it = lines.emplace(var, l).first;
    }
    return it->second[static_cast<std::size_t>(to_int(level) + 1)];
  }
};

NetId rail_for(Netlist& n, Trit level) {
  switch (level) {
  case Trit::N: return n.rail(Rail::vneg);
  case Trit::Z: return n.rail(Rail::gnd);
  default: return n.rail(Rail::vdd);
  }
}

} // namespace

DecoderSynthesis synth_decoder(const TruthTable& t, std::span<const std::string> in_names,
                               std::span<const std::string> out_names) {
  check_table(t);
  if (t.arity_in < 1)
    throw precondition_error("decoder synthesis needs at least one input variable");

  DecoderSynthesis result;
  Netlist& n = result.netlist;
  n.name = "synth-decoder";

  auto ins = resolve_names(in_names, t.arity_in, true);
  auto outs = resolve_names(out_names, t.arity_out, false);

  DecoderBank bank{n};
  bank.in_names = ins;
  for (const std::string& name : ins) {
    bank.in_nets.push_back(n.add_net(name));
    n.add_port(name, PortDir::in, bank.in_nets.back());
  }

  std::map<int, std::shared_ptr<const Netlist>> cell_defs; // by input count

  auto cell = [&](int k) {
    auto it = cell_defs.find(k);
    if (it == cell_defs.end())
      it = cell_defs.emplace(k, std::make_shared<const Netlist>(make_tmin_cell(k))).first;
    return it->second;
  };
  std::map<int, std::shared_ptr<const Netlist>> max_defs;
  auto max_cell = [&](int k) {
    auto it = max_defs.find(k);
    if (it == max_defs.end())
      it = max_defs.emplace(k, std::make_shared<const Netlist>(make_tmax_cell(k))).first;
    return it->second;
  };

  for (int j = 0; j < t.arity_out; ++j) {
    const std::string prefix = lower(outs[static_cast<std::size_t>(j)]);
    MintermPartition part;
    bool constant = true;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      Trit v = t.rows[r][static_cast<std::size_t>(j)];
      if (v != t.rows[0][static_cast<std::size_t>(j)])
        constant = false;
      if (v == Trit::Z)
        part.zero_rows.push_back(r);
      else if (v == Trit::P)
        part.one_rows.push_back(r);
    }

    if (constant) {
      const Trit value = t.rows[0][static_cast<std::size_t>(j)];
      NetId out = n.add_net(outs[static_cast<std::size_t>(j)]);
      n.components.emplace_back(RailTie{prefix + "_tie", out, value});
      n.add_port(outs[static_cast<std::size_t>(j)], PortDir::out, out);
      result.expressions.push_back(Expr::constant(value));
      result.partitions.push_back(MintermPartition{}); // no minterm structure
      continue;
    }

    // One k-input TMIN per minterm, in canonical row order. Lines are
    // resolved before the child is added: bank.line() may itself add a
    // decoder child and move the children vector.
    auto build_minterm = [&](std::size_t row) -> NetId {
      auto inputs = row_inputs(t.arity_in, row);
      if (t.arity_in == 1)
        return bank.line(0, inputs[0]); // a single line needs no gate
      std::vector<NetId> lines;
      for (int v = 0; v < t.arity_in; ++v)
        lines.push_back(bank.line(v, inputs[static_cast<std::size_t>(v)]));
      NetId out = n.add_net(prefix + "_mt" + std::to_string(row));
      Instance& g = n.add_child(prefix + "_min" + std::to_string(row), cell(t.arity_in));
      for (int v = 0; v < t.arity_in; ++v)
        n.bind(g, "IN" + std::to_string(v + 1), lines[static_cast<std::size_t>(v)]);
      n.bind(g, "OUT", out);
      return out;
    };
    auto minterm_expr = [&](std::size_t row) -> Expr {
      auto inputs = row_inputs(t.arity_in, row);
      if (t.arity_in == 1)
        return Expr::line(0, inputs[0]);
      std::vector<Expr> lines;
      for (int v = 0; v < t.arity_in; ++v)
        lines.push_back(Expr::line(v, inputs[static_cast<std::size_t>(v)]));
      return Expr::min_of(std::move(lines));
    };

    // max over a branch's minterms; a singleton branch is a plain wire
    auto build_max = [&](const std::vector<std::size_t>& rows,
                         const std::string& tag) -> NetId {
      std::vector<NetId> nets;
      for (std::size_t r : rows)
        nets.push_back(build_minterm(r));
      if (nets.size() == 1)
        return nets[0];
      NetId out = n.add_net(prefix + "_" + tag);
      Instance& g = n.add_child(prefix + "_" + tag, max_cell(static_cast<int>(nets.size())));
      for (std::size_t i = 0; i < nets.size(); ++i)
        n.bind(g, "IN" + std::to_string(i + 1), nets[i]);
      n.bind(g, "OUT", out);
      return out;
    };

    const bool has_zero = !part.zero_rows.empty();
    const bool has_one = !part.one_rows.empty();

    NetId out_net;
    if (has_zero && has_one) {
      NetId zmax = build_max(part.zero_rows, "zmax");
      NetId clamp_out = n.add_net(prefix + "_clamp");
      Instance& clamp = n.add_child(prefix + "_clamp", cell(2));
      n.bind(clamp, "IN1", n.rail(Rail::gnd));
      n.bind(clamp, "IN2", zmax);
      n.bind(clamp, "OUT", clamp_out);
      NetId pmax = build_max(part.one_rows, "pmax");
      out_net = n.add_net(outs[static_cast<std::size_t>(j)]);
      Instance& fin = n.add_child(prefix + "_out", max_cell(2));
      n.bind(fin, "IN1", clamp_out);
      n.bind(fin, "IN2", pmax);
      n.bind(fin, "OUT", out_net);
    } else if (has_zero) {
      NetId zmax = build_max(part.zero_rows, "zmax");
      out_net = n.add_net(outs[static_cast<std::size_t>(j)]);
      Instance& clamp = n.add_child(prefix + "_clamp", cell(2));
      n.bind(clamp, "IN1", n.rail(Rail::gnd));
      n.bind(clamp, "IN2", zmax);
      n.bind(clamp, "OUT", out_net);
    } else {
      out_net = build_max(part.one_rows, "pmax");
    }
    n.add_port(outs[static_cast<std::size_t>(j)], PortDir::out, out_net);

    // Expression in the canonical decoder form, degenerate branches elided.
    std::vector<Expr> zero_terms, one_terms;
    for (std::size_t r : part.zero_rows)
      zero_terms.push_back(minterm_expr(r));
    for (std::size_t r : part.one_rows)
      one_terms.push_back(minterm_expr(r));
    Expr expr;
    if (has_zero && has_one) {
      Expr clamped = Expr::min_of(
          {Expr::constant(Trit::Z), Expr::max_of(std::move(zero_terms))});
      expr = Expr::max_of({std::move(clamped), Expr::max_of(std::move(one_terms))});
    } else if (has_zero) {
      expr = Expr::min_of({Expr::constant(Trit::Z), Expr::max_of(std::move(zero_terms))});
    } else {
      expr = Expr::max_of(std::move(one_terms));
    }
    result.expressions.push_back(std::move(expr));
    result.partitions.push_back(std::move(part));
  }
  return result;
}

namespace {

Netlist make_mux_core() {
  Netlist n;
  n.name = "mux3_core";
  NetId sm1 = n.add_net("SM1");
  NetId s0 = n.add_net("S0");
  NetId s1 = n.add_net("S1");
  NetId im1 = n.add_net("IM1");
  NetId i0 = n.add_net("I0");
  NetId i1 = n.add_net("I1");
  NetId out = n.add_net("OUT");
  NetId w[3] = {n.add_net("w_m1"), n.add_net("w_0"), n.add_net("w_1")};

  auto tmin_def = std::make_shared<const Netlist>(make_tmin_cell(2));
  auto tmax_def = std::make_shared<const Netlist>(make_tmax_cell(3));
  NetId lines[3] = {sm1, s0, s1};
  NetId data[3] = {im1, i0, i1};
  const char* names[3] = {"min_m1", "min_0", "min_1"};
  for (int i = 0; i < 3; ++i) {
    Instance& g = n.add_child(names[i], tmin_def);
    n.bind(g, "IN1", lines[i]);
    n.bind(g, "IN2", data[i]);
    n.bind(g, "OUT", w[i]);
  }
  Instance& m = n.add_child("max_out", tmax_def);
  n.bind(m, "IN1", w[0]);
  n.bind(m, "IN2", w[1]);
  n.bind(m, "IN3", w[2]);
  n.bind(m, "OUT", out);

  n.add_port("SM1", PortDir::in, sm1);
  n.add_port("S0", PortDir::in, s0);
  n.add_port("S1", PortDir::in, s1);
  n.add_port("IM1", PortDir::in, im1);
  n.add_port("I0", PortDir::in, i0);
  n.add_port("I1", PortDir::in, i1);
  n.add_port("OUT", PortDir::out, out);
  return n;
}

struct MuxSynth {
  const TruthTable& t;
  Netlist& n;
  bool share_decoders;
  DecoderBank bank;
  std::shared_ptr<const Netlist> core_def = std::make_shared<const Netlist>(make_mux_core());
  int mux_counter = 0;
  int private_dec_counter = 0;

  bool slice_constant(int out, std::size_t start, std::size_t len, Trit& value) const {
    value = t.rows[start][static_cast<std::size_t>(out)];
    for (std::size_t r = 1; r < len; ++r)
      if (t.rows[start + r][static_cast<std::size_t>(out)] != value)
        return false;
    return true;
  }

  /// True when the cofactor equals the raw projection of variable `v`.
  bool slice_is_projection(int out, std::size_t start, std::size_t len, int v) const {
    for (std::size_t r = 0; r < len; ++r) {
      auto inputs = row_inputs(t.arity_in, start + r);
      if (t.rows[start + r][static_cast<std::size_t>(out)] !=
          inputs[static_cast<std::size_t>(v)])
        return false;
    }
    return true;
  }

  std::array<NetId, 3> select_lines(int var) {
    if (share_decoders)
      return {bank.line(var, Trit::N), bank.line(var, Trit::Z), bank.line(var, Trit::P)};
    // Unshared: every mux gets a private decoder on its select net.
    const std::string base =
        lower(bank.in_names[static_cast<std::size_t>(var)]) + "_p" +
        std::to_string(++private_dec_counter);
    std::array<NetId, 3> l = {n.add_net(base + "_m1"), n.add_net(base + "_0"),
                              n.add_net(base + "_1")};
    Instance& dec = n.add_child("dec_" + base, bank.dec_def);
    n.bind(dec, "IN", bank.in_nets[static_cast<std::size_t>(var)]);
    n.bind(dec, "YM1", l[0]);
    n.bind(dec, "Y0", l[1]);
    n.bind(dec, "Y1", l[2]);
    return l;
  }

  NetId emit(int out, int depth, std::size_t start, std::size_t len) {
    Trit value;
    if (slice_constant(out, start, len, value))
      return rail_for(n, value);
    for (int v = depth; v < t.arity_in; ++v)
      if (slice_is_projection(out, start, len, v))
        return bank.in_nets[static_cast<std::size_t>(v)];

    if (depth >= t.arity_in)
      throw build_error("internal: mux recursion exhausted the variables");

    const std::size_t third = len / 3;
    NetId cof[3];
    for (int k = 0; k < 3; ++k)
      cof[k] = emit(out, depth + 1, start + static_cast<std::size_t>(k) * third, third);

    auto lines = select_lines(depth);
    NetId out_net = n.add_net("mux" + std::to_string(++mux_counter) + "_out");
    Instance& g = n.add_child("mux" + std::to_string(mux_counter), core_def);
    n.bind(g, "SM1", lines[0]);
    n.bind(g, "S0", lines[1]);
    n.bind(g, "S1", lines[2]);
    n.bind(g, "IM1", cof[0]);
    n.bind(g, "I0", cof[1]);
    n.bind(g, "I1", cof[2]);
    n.bind(g, "OUT", out_net);
    return out_net;
  }
};

} // namespace

Netlist synth_mux(const TruthTable& t, bool share_decoders,
                  std::span<const std::string> in_names,
                  std::span<const std::string> out_names) {
  check_table(t);
  if (t.arity_in < 1)
    throw precondition_error("multiplexer synthesis needs at least one input variable");

  Netlist n;
  n.name = "synth-mux";
  auto ins = resolve_names(in_names, t.arity_in, true);
  auto outs = resolve_names(out_names, t.arity_out, false);

  MuxSynth synth{t, n, share_decoders, DecoderBank{n}};
  synth.bank.in_names = ins;
  for (const std::string& name : ins) {
    synth.bank.in_nets.push_back(n.add_net(name));
    n.add_port(name, PortDir::in, synth.bank.in_nets.back());
  }

  for (int j = 0; j < t.arity_out; ++j) {
    Trit value;
    if (synth.slice_constant(j, 0, t.rows.size(), value)) {
      // A constant table collapses to a rail tie, no mux at all.
      NetId out = n.add_net(outs[static_cast<std::size_t>(j)]);
      n.components.emplace_back(
          RailTie{lower(outs[static_cast<std::size_t>(j)]) + "_tie", out, value});
      n.add_port(outs[static_cast<std::size_t>(j)], PortDir::out, out);
      continue;
    }
    NetId result = synth.emit(j, 0, 0, t.rows.size());
    n.add_port(outs[static_cast<std::size_t>(j)], PortDir::out, result);
  }
  return n;
}

std::vector<CostRow> cost_compare(std::span<const GateKind> kinds,
                                  std::span<const BuildOptions::Method> methods) {
  std::vector<CostRow> rows;
  for (const GateKind& kind : kinds) {
    for (BuildOptions::Method method : methods) {
      BuildOptions opts;
      opts.method = method;
      Netlist circuit = build_structural(kind, opts);
      rows.push_back(CostRow{kind.canonical_name(),
                             method == BuildOptions::Method::decoder ? "decoder" : "mux",
                             count(circuit)});
    }
  }
  return rows;
}

} // namespace bt

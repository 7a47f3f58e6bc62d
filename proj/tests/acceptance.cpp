// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen from the published tables; tolerances
// are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "btlogic/cli.hpp"
#include "btlogic/expression.hpp"
#include "btlogic/gates.hpp"
#include "btlogic/netlist_io.hpp"
#include "btlogic/sim_analog.hpp"
#include "btlogic/sim_digital.hpp"
#include "btlogic/synthesis.hpp"
#include "btlogic/trit.hpp"
#include "btlogic/truth_table.hpp"

using namespace bt;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& msg) {
    ok = false;
    if (detail.empty())
      detail = msg;
  }
  void expect(bool cond, const std::string& msg) {
    if (!cond)
      fail(msg);
  }
};

std::vector<Trit> trits(std::initializer_list<int> values) {
  std::vector<Trit> out;
  for (int v : values)
    out.push_back(trit_of(v));
  return out;
}

GateKind kind_of(const char* name) { return *GateKind::parse(name); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Criterion 1: behavioral_eval and structural sweeps reproduce the published
// truth tables exactly. Zero tolerance; runtime under one second.

const int kMinMaxTable[9][4] = {
    {-1, -1, -1, -1}, {-1, 0, -1, 0}, {-1, 1, -1, 1}, {0, -1, -1, 0}, {0, 0, 0, 0},
    {0, 1, 0, 1},     {1, -1, -1, 1}, {1, 0, 0, 1},   {1, 1, 1, 1},
};
const int kInverterTable[3][4] = {{-1, 1, 1, 1}, {0, 0, 1, -1}, {1, -1, -1, -1}};
const int kEnc31Table[3][4] = {{-1, -1, 1, -1}, {-1, 1, -1, 0}, {1, -1, -1, 1}};
// X4..XM4 one-hot, lowest encoded value first -> (Y1, Y0)
const int kEnc92Outputs[9][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 0},
                                 {0, 1},   {1, -1}, {1, 0},  {1, 1}};
const int kDec13Table[3][3] = {{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
// (A, B) -> (HA-S, HA-C, MUL, MLE)
const int kCombTable[9][6] = {
    {-1, -1, 1, -1, 1, 0}, {-1, 0, -1, 0, 0, -1}, {-1, 1, 0, 0, -1, -1},
    {0, -1, -1, 0, 0, 1},  {0, 0, 0, 0, 0, 0},    {0, 1, 1, 0, 0, -1},
    {1, -1, 0, 0, -1, 1},  {1, 0, 1, 0, 0, 1},    {1, 1, -1, 1, 1, 0},
};

void check_table_pair(Check& c, const char* name, const TruthTable& behavioral,
                      const TruthTable& structural,
                      const std::vector<std::vector<Trit>>& expected) {
  if (behavioral.rows != expected)
    c.fail(std::string(name) + ": behavioral table deviates");
  if (structural.rows != expected)
    c.fail(std::string(name) + ": structural sweep deviates");
}

Check criterion1() {
  Check c;
  const auto start = std::chrono::steady_clock::now();

  {
    std::vector<std::vector<Trit>> min_rows, max_rows;
    for (const auto& row : kMinMaxTable) {
      min_rows.push_back(trits({row[2]}));
      max_rows.push_back(trits({row[3]}));
    }
    check_table_pair(c, "tmin2", behavioral_table(kind_of("tmin2")),
                     sweep(build_named("tmin2")), min_rows);
    check_table_pair(c, "tmax2", behavioral_table(kind_of("tmax2")),
                     sweep(build_named("tmax2")), max_rows);
  }
  {
    std::vector<std::vector<Trit>> s, p, n;
    for (const auto& row : kInverterTable) {
      s.push_back(trits({row[1]}));
      p.push_back(trits({row[2]}));
      n.push_back(trits({row[3]}));
    }
    check_table_pair(c, "sti", behavioral_table(kind_of("sti")), sweep(build_named("sti")), s);
    check_table_pair(c, "pti", behavioral_table(kind_of("pti")), sweep(build_named("pti")), p);
    check_table_pair(c, "nti", behavioral_table(kind_of("nti")), sweep(build_named("nti")), n);
  }
  {
    auto behavioral = encoder_rows(kind_of("enc31"));
    auto structural = sweep_onehot(build_named("enc31"));
    for (std::size_t r = 0; r < 3; ++r) {
      auto expect_in = trits({kEnc31Table[r][0], kEnc31Table[r][1], kEnc31Table[r][2]});
      auto expect_out = trits({kEnc31Table[r][3]});
      if (behavioral[r].inputs != expect_in || behavioral[r].outputs != expect_out)
        c.fail("enc31 behavioral row deviates");
      if (structural[r].inputs != expect_in || structural[r].outputs != expect_out)
        c.fail("enc31 structural row deviates");
    }
  }
  {
    auto behavioral = encoder_rows(kind_of("enc92"));
    auto structural = sweep_onehot(build_named("enc92"));
    for (std::size_t r = 0; r < 9; ++r) {
      auto expect_out = trits({kEnc92Outputs[r][0], kEnc92Outputs[r][1]});
      // one-hot input, lowest value (= XM4, last position) first
      if (behavioral[r].inputs[8 - r] != Trit::P)
        c.fail("enc92 row order deviates");
      if (behavioral[r].outputs != expect_out)
        c.fail("enc92 behavioral row deviates");
      if (structural[r].inputs != behavioral[r].inputs ||
          structural[r].outputs != expect_out)
        c.fail("enc92 structural row deviates");
    }
  }
  {
    std::vector<std::vector<Trit>> rows;
    for (const auto& row : kDec13Table)
      rows.push_back(trits({row[0], row[1], row[2]}));
    check_table_pair(c, "dec13", behavioral_table(kind_of("dec13")),
                     sweep(build_named("dec13")), rows);
  }
  {
    std::vector<std::vector<Trit>> rows;
    for (std::size_t r = 0; r < 9; ++r) {
      std::vector<Trit> row(9, Trit::N);
      row[r] = Trit::P; // row r encodes value r-4 and fires exactly line r
      rows.push_back(row);
    }
    check_table_pair(c, "dec29", behavioral_table(kind_of("dec29")),
                     sweep(build_named("dec29")), rows);
  }
  {
    std::vector<std::vector<Trit>> tha, mul, mle;
    for (const auto& row : kCombTable) {
      tha.push_back(trits({row[2], row[3]}));
      mul.push_back(trits({row[4]}));
      mle.push_back(trits({row[5]}));
    }
    check_table_pair(c, "tha", behavioral_table(kind_of("tha")),
                     sweep(build_named("tha-decoder")), tha);
    check_table_pair(c, "mul", behavioral_table(kind_of("mul")),
                     sweep(build_named("mul-decoder")), mul);
    check_table_pair(c, "mle", behavioral_table(kind_of("mle")),
                     sweep(build_named("mle-decoder")), mle);
    if (sweep(build_named("tha-mux")).rows != tha)
      c.fail("tha mux-method sweep deviates");
    if (sweep(build_named("mul-mux")).rows != mul)
      c.fail("mul mux-method sweep deviates");
    if (sweep(build_named("mle-mux")).rows != mle)
      c.fail("mle mux-method sweep deviates");
  }
  {
    // MUX3 contract: OUT = I_S over all 3*3^3 select/input combinations.
    TruthTable behavioral = behavioral_table(kind_of("mux3"));
    TruthTable structural = sweep(build_named("mux3"));
    for (std::size_t r = 0; r < behavioral.rows.size(); ++r) {
      auto in = row_inputs(4, r);
      Trit selected = in[static_cast<std::size_t>(to_int(in[0]) + 2)];
      if (behavioral.rows[r][0] != selected)
        c.fail("mux3 behavioral contract deviates");
      if (structural.rows[r][0] != selected)
        c.fail("mux3 structural contract deviates");
    }
  }

  const double elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s exceeds 1 s");
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 2: component counts reproduce the published grid exactly.

Check criterion2() {
  Check c;
  struct Row {
    const char* name;
    CostReport expect;
  };
  const Row rows[] = {
      {"tha-decoder", {10, 59, 0}}, {"mul-decoder", {10, 35, 0}},
      {"mle-decoder", {10, 32, 0}}, {"tha-mux", {10, 64, 0}},
      {"mul-mux", {10, 28, 0}},     {"mle-mux", {10, 46, 0}},
      {"dec13", {5, 5, 0}},
  };
  for (const Row& row : rows) {
    CostReport counted = count(build_named(row.name));
    if (!(counted == row.expect))
      c.fail(std::string(row.name) + " counted " + to_string(counted) + ", expected " +
             to_string(row.expect));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 3: synthesis soundness on 200 random tables plus the published
// columns; both methods, mutually equivalent, zero mismatches.

Check criterion3() {
  Check c;
  std::mt19937 rng(424243);
  std::uniform_int_distribution<int> dist(-1, 1);
  int mismatches = 0;

  auto check_one = [&](const TruthTable& t, const char* label) {
    auto dec = synth_decoder(t);
    Netlist mux = synth_mux(t);
    if (!equiv(dec.netlist, t).equal)
      ++mismatches, c.fail(std::string(label) + ": decoder method deviates from the table");
    if (!equiv(mux, t).equal)
      ++mismatches, c.fail(std::string(label) + ": mux method deviates from the table");
    if (!equiv(dec.netlist, mux).equal)
      ++mismatches, c.fail(std::string(label) + ": methods disagree");
  };

  for (int trial = 0; trial < 200; ++trial) {
    TruthTable t;
    t.arity_in = 2;
    t.arity_out = 1;
    for (int r = 0; r < 9; ++r)
      t.rows.push_back({trit_of(dist(rng))});
    check_one(t, "random");
  }
  // the published columns (HA-S, HA-C) as one two-output table plus MUL, MLE
  check_one(behavioral_table(kind_of("tha")), "tha");
  check_one(behavioral_table(kind_of("mul")), "mul");
  check_one(behavioral_table(kind_of("mle")), "mle");
  c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 4: decoder synthesis reproduces the published minterm partitions
// (set equality per branch).

Check criterion4() {
  Check c;
  auto idx = [](int a, int b) { return static_cast<std::size_t>((a + 1) * 3 + (b + 1)); };
  auto as_set = [](const std::vector<std::size_t>& v) {
    return std::set<std::size_t>(v.begin(), v.end());
  };

  auto tha = synth_decoder(behavioral_table(kind_of("tha")));
  c.expect(as_set(tha.partitions[0].zero_rows) ==
               std::set<std::size_t>{idx(-1, 1), idx(0, 0), idx(1, -1)},
           "HA-S zero-branch minterms deviate");
  c.expect(as_set(tha.partitions[0].one_rows) ==
               std::set<std::size_t>{idx(-1, -1), idx(0, 1), idx(1, 0)},
           "HA-S one-branch minterms deviate");
  c.expect(as_set(tha.partitions[1].zero_rows) ==
               std::set<std::size_t>{idx(-1, 0), idx(-1, 1), idx(0, -1), idx(0, 0),
                                     idx(0, 1), idx(1, -1), idx(1, 0)},
           "HA-C zero-branch minterms deviate");
  c.expect(as_set(tha.partitions[1].one_rows) == std::set<std::size_t>{idx(1, 1)},
           "HA-C one-branch minterms deviate");

  auto mul = synth_decoder(behavioral_table(kind_of("mul")));
  c.expect(as_set(mul.partitions[0].zero_rows) ==
               std::set<std::size_t>{idx(-1, 0), idx(0, -1), idx(0, 0), idx(0, 1),
                                     idx(1, 0)},
           "MUL zero-branch minterms deviate");
  c.expect(as_set(mul.partitions[0].one_rows) ==
               std::set<std::size_t>{idx(-1, -1), idx(1, 1)},
           "MUL one-branch minterms deviate");

  auto mle = synth_decoder(behavioral_table(kind_of("mle")));
  c.expect(as_set(mle.partitions[0].zero_rows) ==
               std::set<std::size_t>{idx(-1, -1), idx(0, 0), idx(1, 1)},
           "MLE zero-branch minterms deviate");
  c.expect(as_set(mle.partitions[0].one_rows) ==
               std::set<std::size_t>{idx(0, -1), idx(1, -1), idx(1, 0)},
           "MLE one-branch minterms deviate");
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 5: analog/digital agreement under default parameters, with the
// divider deviation bound, KCL residual < 1e-9 A and convergence within 32
// iterations.

Check criterion5() {
  Check c;
  const ToolkitConfig cfg;
  const LevelMap levels(1.0);
  const double r_lrs = cfg.device.r_lrs;
  const double r_hrs = cfg.device.r_hrs;

  for (const char* name : {"tmin2", "tmin3", "tmax2", "tmax3", "sti", "pti", "nti", "dec13"}) {
    Netlist circuit = build_named(name);
    DigitalCircuit digital(circuit);
    GateKind kind = kind_of(name);
    const bool is_minmax = kind.tag == GateKind::Tag::tmin || kind.tag == GateKind::Tag::tmax;
    const int k = kind.num_inputs();
    // Divider bound: spec formula for the 2-input case, same derivation with
    // (k-1) losing branches for wider gates; applied on full-swing tuples.
    const double losers = static_cast<double>(k - 1);
    const double bound = 2.0 * levels.vdd() * (losers * r_lrs) / (losers * r_lrs + r_hrs);

    for (std::size_t r = 0; r < table_rows(k); ++r) {
      auto inputs = row_inputs(k, r);
      SteadyState s = settle(circuit, inputs, levels, cfg);
      if (!s.converged || s.iterations > 32) {
        c.fail(std::string(name) + ": no convergence within 32 iterations");
        continue;
      }
      if (!(s.kcl_residual < 1e-9))
        c.fail(std::string(name) + ": KCL residual " + std::to_string(s.kcl_residual));
      if (read_outputs(s, levels) != digital.eval(inputs))
        c.fail(std::string(name) + ": quantized analog output deviates from digital");

      if (is_minmax) {
        int lo = 2, hi = -2;
        for (Trit t : inputs) {
          lo = std::min(lo, to_int(t));
          hi = std::max(hi, to_int(t));
        }
        const bool full_swing = (hi - lo) == 2;
        if (k == 2 || full_swing) {
          double ideal = levels.to_voltage(behavioral_eval(kind, inputs)[0]);
          double v_out = 0.0;
          for (const Port& p : s.circuit.ports)
            if (p.dir == PortDir::out)
              v_out = s.node_voltages.at(p.net.value);
          const double allowed = (k == 2)
                                     ? 2.0 * levels.vdd() * r_lrs / (r_lrs + r_hrs)
                                     : bound;
          if (!(std::fabs(v_out - ideal) <= allowed + 1e-12))
            c.fail(std::string(name) + ": output deviation " +
                   std::to_string(std::fabs(v_out - ideal)) + " V exceeds " +
                   std::to_string(allowed) + " V");
        }
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 6: arithmetic claims and the balanced codec.

Check criterion6() {
  Check c;
  int nonzero_carry = 0;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      auto in = trits({a, b});
      auto ha = behavioral_eval(kind_of("tha"), in);
      if (ha[1] != Trit::Z)
        ++nonzero_carry;
      if (to_int(behavioral_eval(kind_of("mul"), in)[0]) != a * b)
        c.fail("MUL(" + std::to_string(a) + "," + std::to_string(b) + ") != product");
      int d = a - b;
      if (to_int(behavioral_eval(kind_of("mle"), in)[0]) != (d > 0) - (d < 0))
        c.fail("MLE(" + std::to_string(a) + "," + std::to_string(b) + ") != sign");
      // the adder's algebra: a + b = 3*C + S
      if (3 * to_int(ha[1]) + to_int(ha[0]) != a + b)
        c.fail("THA decomposition broken");
    }
  }
  c.expect(nonzero_carry == 2,
           "carry nonzero in " + std::to_string(nonzero_carry) + " of 9 cases, expected 2");

  for (long long v = -121; v <= 121; ++v) {
    BalancedWord w = int_to_word(v, 5);
    long long check = 0, weight = 1;
    for (Trit t : w.trits) {
      check += weight * to_int(t);
      weight *= 3;
    }
    if (check != v || word_to_int(w) != v) {
      c.fail("codec round trip failed at " + std::to_string(v));
      break;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 7: power methodology properties (the published absolute values
// depend on unpublished device parameters and are not asserted).

Check criterion7() {
  Check c;
  const ToolkitConfig cfg;
  const LevelMap levels(1.0);
  const double leak_bound = (2.0 * levels.vdd()) * (2.0 * levels.vdd()) / cfg.device.r_off;

  for (const char* name : {"tmin2", "tmax3", "dec13", "tha-decoder", "tha-mux", "mul-decoder",
                           "mul-mux", "mle-decoder", "mle-mux"}) {
    Netlist circuit = build_named(name);
    PowerReport report = power_report(circuit, levels, cfg);
    double sum = 0.0;
    for (double p : report.static_per_input) {
      if (!(p >= 0.0))
        c.fail(std::string(name) + ": negative static power");
      sum += p;
    }
    const double mean = sum / static_cast<double>(report.static_per_input.size());
    if (std::fabs(report.average - mean) > 1e-18 + 1e-12 * std::fabs(mean))
      c.fail(std::string(name) + ": average is not the mean of the statics");
    if (std::fabs(report.dynamic_power -
                  std::fabs(report.max_instantaneous - report.average)) > 1e-18)
      c.fail(std::string(name) + ": dynamic != |max instantaneous - average|");
    if (!(report.dynamic_power >= 0.0) || !(report.max_static >= 0.0))
      c.fail(std::string(name) + ": negative power figure");
  }

  // equal-input min/max static power is bounded by pure leakage
  for (const char* name : {"tmin2", "tmin3", "tmax2", "tmax3"}) {
    Netlist circuit = build_named(name);
    GateKind kind = kind_of(name);
    for (int v = -1; v <= 1; ++v) {
      std::vector<Trit> inputs(static_cast<std::size_t>(kind.num_inputs()), trit_of(v));
      SteadyState s = settle(circuit, inputs, levels, cfg);
      if (!(static_power(s) <= leak_bound + 1e-15))
        c.fail(std::string(name) + ": equal-input power above the leakage bound");
    }
  }

  // compare-power must emit the grid with the reference claim alongside
  std::ostringstream out, err;
  int code = dispatch({"compare-power"}, out, err);
  c.expect(code == 0, "compare-power exited with " + std::to_string(code));
  const std::string text = out.str();
  for (const char* needle : {"tha", "mul", "mle", "decoder", "mux", "99.77%", "not asserted"})
    if (text.find(needle) == std::string::npos)
      c.fail(std::string("compare-power output is missing '") + needle + "'");
  return c;
}

} // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  struct Entry {
    int number;
    const char* label;
    Check (*fn)();
  };
  const Entry entries[] = {
      {1, "truth-table fidelity (published tables, zero tolerance)", criterion1},
      {2, "component-count reproduction (exact integers)", criterion2},
      {3, "synthesis soundness (200 random + published columns)", criterion3},
      {4, "expression fidelity (published minterm partitions)", criterion4},
      {5, "analog/digital agreement (bounds, KCL, convergence)", criterion5},
      {6, "arithmetic claims and balanced codec", criterion6},
      {7, "power methodology properties", criterion7},
  };

  int failures = 0;
  for (const Entry& entry : entries) {
    Check c;
    try {
      c = entry.fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    if (c.ok) {
      std::printf("PASS criterion %d: %s\n", entry.number, entry.label);
    } else {
      std::printf("FAIL criterion %d: %s -- %s\n", entry.number, entry.label,
                  c.detail.c_str());
      ++failures;
    }
  }

  const double elapsed = seconds_since(start);
  std::printf("acceptance suite: %d/7 passed in %.2f s\n", 7 - failures, elapsed);
  if (elapsed >= 30.0) {
    std::printf("FAIL runtime: %.2f s exceeds the 30 s target\n", elapsed);
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}

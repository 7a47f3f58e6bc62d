#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "btlogic/expression.hpp"
#include "btlogic/netlist_io.hpp"
#include "btlogic/sim_digital.hpp"
#include "btlogic/synthesis.hpp"

using namespace bt;

namespace {

std::vector<Trit> trits(std::initializer_list<int> values) {
  std::vector<Trit> out;
  for (int v : values)
    out.push_back(trit_of(v));
  return out;
}

std::set<std::size_t> row_set(const std::vector<std::size_t>& rows) {
  return {rows.begin(), rows.end()};
}

std::size_t idx(int a, int b) {
  return static_cast<std::size_t>((a + 1) * 3 + (b + 1));
}

int count_children_named(const Netlist& n, const std::string& def_name) {
  int c = 0;
  for (const Instance& inst : n.children)
    c += inst.def->name == def_name;
  return c;
}

} // namespace

TEST_CASE("half adder sum partition matches the published expression") {
  GateKind tha = *GateKind::parse("tha");
  auto synth = synth_decoder(behavioral_table(tha), tha.input_names(), tha.output_names());
  REQUIRE(synth.partitions.size() == 2);
  // S = 0*(A-1B1 + A0B0 + A1B-1) + (A-1B-1 + A0B1 + A1B0)
  CHECK(row_set(synth.partitions[0].zero_rows) ==
        std::set<std::size_t>{idx(-1, 1), idx(0, 0), idx(1, -1)});
  CHECK(row_set(synth.partitions[0].one_rows) ==
        std::set<std::size_t>{idx(-1, -1), idx(0, 1), idx(1, 0)});
  // C = 0*(A-1B0 + A-1B1 + A0B-1 + A0B0 + A0B1 + A1B-1 + A1B0) + (A1B1)
  CHECK(row_set(synth.partitions[1].zero_rows) ==
        std::set<std::size_t>{idx(-1, 0), idx(-1, 1), idx(0, -1), idx(0, 0), idx(0, 1),
                              idx(1, -1), idx(1, 0)});
  CHECK(row_set(synth.partitions[1].one_rows) == std::set<std::size_t>{idx(1, 1)});
}

TEST_CASE("multiplier partition matches the published expression") {
  GateKind mul = *GateKind::parse("mul");
  auto synth = synth_decoder(behavioral_table(mul));
  // MUL = 0*(A-1B0 + A0B-1 + A0B0 + A0B1 + A1B0) + (A-1B-1 + A1B1)
  CHECK(row_set(synth.partitions[0].zero_rows) ==
        std::set<std::size_t>{idx(-1, 0), idx(0, -1), idx(0, 0), idx(0, 1), idx(1, 0)});
  CHECK(row_set(synth.partitions[0].one_rows) ==
        std::set<std::size_t>{idx(-1, -1), idx(1, 1)});
}

TEST_CASE("comparator partition matches the published expression") {
  GateKind mle = *GateKind::parse("mle");
  auto synth = synth_decoder(behavioral_table(mle));
  // MLE = 0*(A-1B-1 + A0B0 + A1B1) + (A0B-1 + A1B-1 + A1B0)
  CHECK(row_set(synth.partitions[0].zero_rows) ==
        std::set<std::size_t>{idx(-1, -1), idx(0, 0), idx(1, 1)});
  CHECK(row_set(synth.partitions[0].one_rows) ==
        std::set<std::size_t>{idx(0, -1), idx(1, -1), idx(1, 0)});
}

TEST_CASE("decoder expressions evaluate like the table") {
  GateKind tha = *GateKind::parse("tha");
  TruthTable table = behavioral_table(tha);
  auto synth = synth_decoder(table);
  // the published spot values
  CHECK(expr_eval(synth.expressions[0], trits({1, 1})) == Trit::N);  // S(1,1) = -1
  CHECK(expr_eval(synth.expressions[1], trits({1, 1})) == Trit::P);  // C(1,1) = 1
  GateKind mul = *GateKind::parse("mul");
  auto mul_synth = synth_decoder(behavioral_table(mul));
  CHECK(expr_eval(mul_synth.expressions[0], trits({-1, -1})) == Trit::P);
  // full agreement between expression and netlist simulation
  TruthTable swept = sweep(synth.netlist);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    auto inputs = row_inputs(2, r);
    CHECK(expr_eval(synth.expressions[0], inputs) == swept.rows[r][0]);
    CHECK(expr_eval(synth.expressions[1], inputs) == swept.rows[r][1]);
  }
}

TEST_CASE("an empty max is the identity -1") {
  Expr empty = Expr::max_of({});
  CHECK(expr_eval(empty, {}) == Trit::N);
  Expr empty_min = Expr::min_of({});
  CHECK(expr_eval(empty_min, {}) == Trit::P);
}

TEST_CASE("expression printing uses the established notation") {
  GateKind tha = *GateKind::parse("tha");
  auto synth = synth_decoder(behavioral_table(tha), tha.input_names(), tha.output_names());
  std::vector<std::string> names = {"A", "B"};
  std::string s = to_string(synth.expressions[0], names);
  CHECK(s == "0\xC2\xB7(A\xE2\x82\x8B\xE2\x82\x81"
             "B\xE2\x82\x81 + A\xE2\x82\x80"
             "B\xE2\x82\x80 + A\xE2\x82\x81"
             "B\xE2\x82\x8B\xE2\x82\x81) + "
             "(A\xE2\x82\x8B\xE2\x82\x81"
             "B\xE2\x82\x8B\xE2\x82\x81 + A\xE2\x82\x80"
             "B\xE2\x82\x81 + A\xE2\x82\x81"
             "B\xE2\x82\x80)");
  std::string c = to_string(synth.expressions[1], names);
  CHECK(c.ends_with("+ A\xE2\x82\x81"
                    "B\xE2\x82\x81"));
}

TEST_CASE("unbound expression variables are reported") {
  Expr line = Expr::line(3, Trit::Z);
  CHECK_THROWS_AS(expr_eval(line, trits({1, 1})), range_error);
}

TEST_CASE("constant tables synthesize to bare rail ties") {
  TruthTable constant;
  constant.arity_in = 2;
  constant.arity_out = 1;
  constant.rows.assign(9, {Trit::N});
  auto synth = synth_decoder(constant);
  CHECK(count(synth.netlist) == CostReport{0, 0, 0});
  CHECK(synth.expressions[0] == Expr::constant(Trit::N));
  CHECK(synth.partitions[0].zero_rows.empty());
  CHECK(synth.partitions[0].one_rows.empty());
  for (const auto& row : sweep(synth.netlist).rows)
    CHECK(row[0] == Trit::N);

  Netlist mux = synth_mux(constant);
  CHECK(count(mux) == CostReport{0, 0, 0});
  for (const auto& row : sweep(mux).rows)
    CHECK(row[0] == Trit::N);

  TruthTable zeros = constant;
  zeros.rows.assign(9, {Trit::Z});
  CHECK(count(synth_decoder(zeros).netlist) == CostReport{0, 0, 0});
}

TEST_CASE("mux synthesis reproduces the published structures") {
  GateKind tha = *GateKind::parse("tha");
  Netlist tha_mux = synth_mux(behavioral_table(tha), true, tha.input_names(),
                              tha.output_names());
  CHECK(count_children_named(tha_mux, "mux3_core") == 6);
  CHECK(count_children_named(tha_mux, "dec13") == 2); // shared per select net
  CHECK(count(tha_mux) == CostReport{10, 64, 0});

  GateKind mul = *GateKind::parse("mul");
  Netlist mul_mux = synth_mux(behavioral_table(mul));
  CHECK(count_children_named(mul_mux, "mux3_core") == 2); // constant + wire cofactors
  CHECK(count(mul_mux) == CostReport{10, 28, 0});

  GateKind mle = *GateKind::parse("mle");
  Netlist mle_mux = synth_mux(behavioral_table(mle));
  CHECK(count_children_named(mle_mux, "mux3_core") == 4);
  CHECK(count(mle_mux) == CostReport{10, 46, 0});
}

TEST_CASE("decoder sharing can be disabled") {
  GateKind tha = *GateKind::parse("tha");
  Netlist shared = synth_mux(behavioral_table(tha), true);
  Netlist unshared = synth_mux(behavioral_table(tha), false);
  CHECK(count(shared) == CostReport{10, 64, 0});
  CHECK(count(unshared) == CostReport{30, 84, 0}); // one private decoder per mux
  CHECK(equiv(shared, unshared).equal);
}

TEST_CASE("identity and projection tables become wires") {
  // f(A, B) = B
  TruthTable proj;
  proj.arity_in = 2;
  proj.arity_out = 1;
  for (std::size_t r = 0; r < 9; ++r)
    proj.rows.push_back({row_inputs(2, r)[1]});
  Netlist mux = synth_mux(proj);
  CHECK(count(mux) == CostReport{0, 0, 0}); // a single wire, no components
  for (std::size_t r = 0; r < 9; ++r)
    CHECK(eval_digital(mux, row_inputs(2, r))[0] == row_inputs(2, r)[1]);
}

TEST_CASE("random tables synthesize soundly via both methods") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> dist(-1, 1);
  for (int trial = 0; trial < 60; ++trial) {
    TruthTable t;
    t.arity_in = 2;
    t.arity_out = 1;
    for (int r = 0; r < 9; ++r)
      t.rows.push_back({trit_of(dist(rng))});

    auto dec = synth_decoder(t);
    Netlist mux = synth_mux(t);
    CHECK(equiv(dec.netlist, t).equal);
    CHECK(equiv(mux, t).equal);
    CHECK(equiv(dec.netlist, mux).equal);
    for (std::size_t r = 0; r < 9; ++r)
      CHECK(expr_eval(dec.expressions[0], row_inputs(2, r)) == t.rows[r][0]);
  }
}

TEST_CASE("three-input tables synthesize soundly") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-1, 1);
  for (int trial = 0; trial < 6; ++trial) {
    TruthTable t;
    t.arity_in = 3;
    t.arity_out = 2;
    for (int r = 0; r < 27; ++r)
      t.rows.push_back({trit_of(dist(rng)), trit_of(dist(rng))});
    auto dec = synth_decoder(t);
    Netlist mux = synth_mux(t);
    CHECK(equiv(dec.netlist, t).equal);
    CHECK(equiv(mux, t).equal);
  }
}

TEST_CASE("one-input tables synthesize soundly") {
  // all 27 single-output tables over one variable
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) {
        TruthTable t;
        t.arity_in = 1;
        t.arity_out = 1;
        t.rows = {{trit_of(a)}, {trit_of(b)}, {trit_of(c)}};
        CHECK(equiv(synth_decoder(t).netlist, t).equal);
        CHECK(equiv(synth_mux(t), t).equal);
      }
}

TEST_CASE("re-synthesis of a synthesized circuit is byte-identical") {
  GateKind mle = *GateKind::parse("mle");
  TruthTable table = behavioral_table(mle);
  auto first = synth_decoder(table);
  auto second = synth_decoder(sweep(first.netlist));
  CHECK(write_netlist_string(first.netlist) == write_netlist_string(second.netlist));

  Netlist mux_first = synth_mux(table);
  Netlist mux_second = synth_mux(sweep(mux_first));
  CHECK(write_netlist_string(mux_first) == write_netlist_string(mux_second));
}

TEST_CASE("cost_compare covers the full grid") {
  std::vector<GateKind> kinds = {*GateKind::parse("tha"), *GateKind::parse("mul"),
                                 *GateKind::parse("mle")};
  std::vector<BuildOptions::Method> methods = {BuildOptions::Method::decoder,
                                               BuildOptions::Method::mux};
  auto rows = cost_compare(kinds, methods);
  REQUIRE(rows.size() == 6);
  const int expect_m[6] = {59, 64, 35, 28, 32, 46};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].cost.transistors == 10);
    CHECK(rows[i].cost.memristors == expect_m[i]);
  }
}

TEST_CASE("incomplete tables are rejected") {
  TruthTable t;
  t.arity_in = 2;
  t.arity_out = 1;
  t.rows.assign(8, {Trit::Z}); // one row short
  CHECK_THROWS_AS(synth_decoder(t), arity_error);
  CHECK_THROWS_AS(synth_mux(t), arity_error);
}

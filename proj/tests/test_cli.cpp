#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "btlogic/cli.hpp"
#include "btlogic/config.hpp"
#include "btlogic/gates.hpp"
#include "btlogic/netlist_io.hpp"
#include "btlogic/truth_table.hpp"

using namespace bt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("truth prints the tmin column of the two-input table") {
  Run r = run_cli({"truth", "tmin2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("IN1") != std::string::npos);
  // nine rows ending with the min value
  CHECK(r.out.find("-1\t-1\t|\t-1") != std::string::npos);
  CHECK(r.out.find("1\t-1\t|\t-1") != std::string::npos);
  CHECK(r.out.find("1\t1\t|\t1") != std::string::npos);
}

TEST_CASE("truth prints encoder one-hot rows") {
  Run r = run_cli({"truth", "enc31"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("X1\tX0\tXM1\t|\tY") != std::string::npos);
  CHECK(r.out.find("-1\t-1\t1\t|\t-1") != std::string::npos);
}

TEST_CASE("sim reports the half adder worked example") {
  Run r = run_cli({"sim", "tha-decoder", "--inputs", "1", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "S=-1 C=1\n");
}

TEST_CASE("sim handles negative trits and letter forms") {
  Run digits = run_cli({"sim", "mul-decoder", "--inputs", "-1", "1"});
  CHECK(digits.code == kExitOk);
  CHECK(digits.out == "OUT=-1\n");
  Run letters = run_cli({"sim", "mul-decoder", "--inputs", "N", "P"});
  CHECK(letters.out == digits.out);
}

TEST_CASE("sim analog backend agrees with digital on dec13") {
  Run digital = run_cli({"sim", "dec13", "--inputs", "0"});
  Run analog = run_cli({"sim", "dec13", "--inputs", "0", "--backend", "analog"});
  CHECK(digital.code == kExitOk);
  CHECK(analog.code == kExitOk);
  CHECK(digital.out == analog.out);
  CHECK(digital.out == "YM1=-1 Y0=1 Y1=-1\n");
}

TEST_CASE("compare-table9 reproduces the published grid and self-checks") {
  Run r = run_cli({"compare-table9"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("10T59M") != std::string::npos);
  CHECK(r.out.find("10T64M") != std::string::npos);
  CHECK(r.out.find("10T28M") != std::string::npos);
  CHECK(r.out.find("5T5M") != std::string::npos);
  CHECK(r.out.find("all component counts match") != std::string::npos);
}

TEST_CASE("count prints the tally") {
  Run r = run_cli({"count", "mle-decoder"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "10T32M\n");
}

TEST_CASE("sweep output is byte-deterministic") {
  Run a = run_cli({"sweep", "tha-mux"});
  Run b = run_cli({"sweep", "tha-mux"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("csv format switches the delimiter") {
  Run r = run_cli({"--format", "csv", "sweep", "mul-decoder"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("A,B,OUT") != std::string::npos);
  CHECK(r.out.find("-1,-1,1") != std::string::npos);
}

TEST_CASE("synth emits a netlist that round-trips and a matching expression") {
  GateKind mle = *GateKind::parse("mle");
  auto table_path = temp_file("bt_mle_table.ttab");
  write_table(behavioral_table(mle), table_path);

  auto netlist_path = temp_file("bt_mle_synth.btnl");
  Run synth = run_cli({"synth", table_path.string(), "--method", "decoder", "-o",
                       netlist_path.string()});
  CHECK(synth.code == kExitOk);
  Netlist back = read_netlist(netlist_path);
  CHECK(count(back) == CostReport{10, 32, 0});

  Run expr = run_cli({"synth", table_path.string(), "--method", "decoder", "--emit", "expr"});
  CHECK(expr.code == kExitOk);
  CHECK(expr.out.find("Y0 = ") != std::string::npos);
  CHECK(expr.out.find("+") != std::string::npos);

  Run mux = run_cli({"synth", table_path.string(), "--method", "mux"});
  CHECK(mux.code == kExitOk);
  CHECK(mux.out.find("mux3_core") != std::string::npos);

  std::filesystem::remove(table_path);
  std::filesystem::remove(netlist_path);
}

TEST_CASE("synth rejects expr emission for the mux method") {
  GateKind mul = *GateKind::parse("mul");
  auto table_path = temp_file("bt_mul_table.ttab");
  write_table(behavioral_table(mul), table_path);
  Run r = run_cli({"synth", table_path.string(), "--method", "mux", "--emit", "expr"});
  CHECK(r.code == kExitBuild);
  std::filesystem::remove(table_path);
}

TEST_CASE("power subcommand emits a full report") {
  Run r = run_cli({"power", "tmin2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("average_W") != std::string::npos);
  CHECK(r.out.find("dynamic_W") != std::string::npos);
  Run again = run_cli({"power", "tmin2"});
  CHECK(again.out == r.out); // deterministic
}

TEST_CASE("compare-power emits the grid with the reference note") {
  Run r = run_cli({"compare-power"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("tha\tdecoder") != std::string::npos);
  CHECK(r.out.find("tha\tmux") != std::string::npos);
  CHECK(r.out.find("mle\tmux") != std::string::npos);
  CHECK(r.out.find("99.77%") != std::string::npos);
  CHECK(r.out.find("not asserted") != std::string::npos);
}

TEST_CASE("help exits cleanly and lists the circuit names") {
  Run r = run_cli({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("tha-decoder") != std::string::npos);
  CHECK(r.out.find("mle-mux") != std::string::npos);
}

TEST_CASE("exit codes distinguish failure families") {
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"sim", "no-such-circuit", "--inputs", "1"}).code == kExitBuild);
  CHECK(run_cli({"count", "definitely/missing/file.btnl"}).code == kExitFile);
  CHECK(run_cli({"sim", "tha-decoder", "--inputs", "2", "2"}).code == kExitBuild);

  auto bad_path = temp_file("bt_bad.btnl");
  std::ofstream(bad_path) << "btnl 1\nnetlist x\nports:\nend\ntop x\n";
  CHECK(run_cli({"count", bad_path.string()}).code == kExitFile);
  std::filesystem::remove(bad_path);
}

TEST_CASE("config file drives the device parameters") {
  ToolkitConfig cfg;
  cfg.vdd = 2.0;
  cfg.device.r_lrs = 5e3;
  auto cfg_path = temp_file("bt_cfg.btcfg");
  write_config(cfg, cfg_path);

  ToolkitConfig back = read_config(cfg_path);
  CHECK(back.vdd == doctest::Approx(2.0));
  CHECK(back.device.r_lrs == doctest::Approx(5e3));
  CHECK(config_to_string(back) == config_to_string(cfg)); // round trip

  Run r = run_cli({"--config", cfg_path.string(), "sim", "tmin2", "--inputs", "1", "-1",
                   "--backend", "analog"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "OUT=-1\n");
  std::filesystem::remove(cfg_path);
}

TEST_CASE("config rejects inconsistent values") {
  CHECK_THROWS_AS(parse_config("btcfg 1\nvdd -1\n"), range_error);
  CHECK_THROWS_AS(parse_config("btcfg 1\nr_hrs 10\nr_lrs 100\n"), range_error);
  CHECK_THROWS_AS(parse_config("btcfg 1\nbogus 3\n"), parse_error);
  CHECK_THROWS_AS(parse_config("nonsense"), parse_error);
}

#pragma once

#include <span>
#include <string>
#include <vector>

#include "btlogic/expression.hpp"
#include "btlogic/gates.hpp"
#include "btlogic/netlist.hpp"
#include "btlogic/truth_table.hpp"

namespace bt {

/// Canonical-row indices of the table rows that end up in each branch of the
/// decoder form: `zero_rows` feed the 0-clamped max, `one_rows` the direct
/// max. Rows whose output is -1 are omitted.
struct MintermPartition {
  std::vector<std::size_t> zero_rows;
  std::vector<std::size_t> one_rows;
};

struct DecoderSynthesis {
  std::vector<Expr> expressions;          // one per output, decoder form
  std::vector<MintermPartition> partitions;
  Netlist netlist;
};

/// Decoder-based synthesis: one 1-3 decoder per variable (shared across
/// outputs), one k-input TMIN per minterm, max trees, and a constant-0 clamp
/// realized as a TMIN against the GND rail. Constant outputs become rail
/// ties. Minterms are emitted in canonical row order.
DecoderSynthesis synth_decoder(const TruthTable& t,
                               std::span<const std::string> in_names = {},
                               std::span<const std::string> out_names = {});

/// Multiplexer-based synthesis: the first variable selects at the outermost
/// stage, later variables at inner stages. Constant cofactors become rail
/// leaves, cofactors equal to a remaining variable's projection become wires,
/// and muxes sharing a select net share one decoder instance (when
/// share_decoders is set).
Netlist synth_mux(const TruthTable& t, bool share_decoders = true,
                  std::span<const std::string> in_names = {},
                  std::span<const std::string> out_names = {});

struct CostRow {
  std::string circuit;
  std::string method;
  CostReport cost;
};

/// Component tallies for each (kind, method) combination.
std::vector<CostRow> cost_compare(std::span<const GateKind> kinds,
                                  std::span<const BuildOptions::Method> methods);

} // namespace bt

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "btlogic/netlist.hpp"
#include "btlogic/trit.hpp"
#include "btlogic/truth_table.hpp"

namespace bt {

/// Every gate and circuit in the library. TMIN/TMAX carry a configurable
/// input count; all other kinds have fixed arity.
struct GateKind {
  enum class Tag {
    tmin,  // k-input minimum
    tmax,  // k-input maximum
    sti,   // standard ternary inverter
    pti,   // positive ternary inverter
    nti,   // negative ternary inverter
    enc31, // 3-1 encoder (one-hot in, trit out)
    enc92, // 9-2 encoder (one-hot in, two trits out)
    dec13, // 1-3 decoder
    dec29, // 2-9 decoder
    mux3,  // ternary multiplexer
    tha,   // half adder (sum, carry)
    mul,   // single-trit multiplier
    mle,   // numerical comparator (more/less/equal)
  };

  Tag tag = Tag::tmin;
  int k = 2; // tmin/tmax input count, >= 2

  int num_inputs() const;
  int num_outputs() const;
  std::vector<std::string> input_names() const;
  std::vector<std::string> output_names() const;
  std::string canonical_name() const; // "tmin2", "dec13", ...
  bool is_encoder() const { return tag == Tag::enc31 || tag == Tag::enc92; }

  static std::optional<GateKind> parse(std::string_view name);

  friend bool operator==(const GateKind&, const GateKind&) = default;
};

/// Truth-table semantics for every kind (Tables 1-8). Encoder inputs must be
/// one-hot: exactly one +1, the rest -1.
std::vector<Trit> behavioral_eval(const GateKind& kind, std::span<const Trit> inputs);

/// Complete behavioral truth table; refuses encoders (their domain is the
/// one-hot subset, see encoder_rows).
TruthTable behavioral_table(const GateKind& kind);

struct OneHotRow {
  std::vector<Trit> inputs;
  std::vector<Trit> outputs;
};

/// The defined rows of an encoder: each one-hot input pattern in turn,
/// ordered from the highest encoded value down (table order).
std::vector<OneHotRow> encoder_rows(const GateKind& kind);

struct BuildOptions {
  enum class Method { decoder, mux };
  Method method = Method::decoder; // realization for tha/mul/mle
  bool share_decoders = true;      // mux method: reuse decoders per select net
};

/// Structural netlist builder. Component tallies for the decoder and the
/// tha/mul/mle circuits match the published counts exactly; encoder netlists
/// contain behavioral subcircuit primitives and are excluded from counting
/// claims.
Netlist build_structural(const GateKind& kind, const BuildOptions& options = {});

// Leaf cells (annotated for the digital backend).
Netlist make_tmin_cell(int k);
Netlist make_tmax_cell(int k);
Netlist make_sti_cell();
Netlist make_pti_cell();
Netlist make_nti_cell();
Netlist make_dec13_y0_cell();

Netlist make_dec13();
Netlist make_dec29();
Netlist make_mux3();
Netlist make_enc31();
Netlist make_enc92();

/// Circuit names accepted by the CLI: gate names plus the method-qualified
/// forms "tha-decoder", "tha-mux", "mul-decoder", "mul-mux", "mle-decoder",
/// "mle-mux". Throws build_error for unknown names.
Netlist build_named(std::string_view name);
std::vector<std::string> known_circuit_names();

} // namespace bt

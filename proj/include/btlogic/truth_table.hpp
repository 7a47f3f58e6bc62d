#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "btlogic/trit.hpp"

namespace bt {

/// Complete mapping from every n-trit input tuple to m-trit outputs.
/// Rows are kept in canonical order: inputs enumerate lexicographically over
/// (-1, 0, 1) with the first input as the most significant position, so row 0
/// is (-1, ..., -1) and the last row is (1, ..., 1).
struct TruthTable {
  int arity_in = 0;
  int arity_out = 0;
  std::vector<std::vector<Trit>> rows; // outputs only; 3^arity_in rows

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

std::size_t table_rows(int arity_in);

/// Input tuple of a canonical row.
std::vector<Trit> row_inputs(int arity_in, std::size_t row);

/// Canonical row index of an input tuple.
std::size_t row_index(std::span<const Trit> inputs);

TruthTable make_table(int arity_in, int arity_out,
                      const std::function<std::vector<Trit>(std::span<const Trit>)>& fn);

/// Checks shape and trit validity; throws range_error / arity_error.
void check_table(const TruthTable& t);

std::string table_to_text(const TruthTable& t, std::span<const std::string> in_names = {},
                          std::span<const std::string> out_names = {});
std::string table_to_csv(const TruthTable& t, std::span<const std::string> in_names = {},
                         std::span<const std::string> out_names = {});

// Truth-table file format ("ttab 1"): header with arities, then 3^n rows of
// input and output trits in canonical order, separated by '|'.
std::string table_to_file_string(const TruthTable& t);
TruthTable table_from_file_string(std::string_view text, std::string_view origin = "<string>");
TruthTable read_table(const std::filesystem::path& path);
void write_table(const TruthTable& t, const std::filesystem::path& path);

/// Default variable names A, B, C, ... used for printing and synthesis.
std::string var_name(int index);

} // namespace bt

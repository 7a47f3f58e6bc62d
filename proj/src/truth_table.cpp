#include "btlogic/truth_table.hpp"

#include <fstream>
#include <sstream>

#include "btlogic/errors.hpp"

namespace bt {

std::size_t table_rows(int arity_in) {
  if (arity_in < 0 || arity_in > 9)
    throw range_error("unsupported table arity " + std::to_string(arity_in));
  std::size_t n = 1;
  for (int i = 0; i < arity_in; ++i)
    n *= 3;
  return n;
}

std::vector<Trit> row_inputs(int arity_in, std::size_t row) {
  const std::size_t total = table_rows(arity_in);
  if (row >= total)
    throw range_error("row index out of range");
  std::vector<Trit> in(static_cast<std::size_t>(arity_in));
  for (int i = arity_in - 1; i >= 0; --i) {
    in[static_cast<std::size_t>(i)] = static_cast<Trit>(static_cast<int>(row % 3) - 1);
    row /= 3;
  }
  return in;
}

std::size_t row_index(std::span<const Trit> inputs) {
  std::size_t r = 0;
  for (Trit t : inputs)
    r = r * 3 + static_cast<std::size_t>(to_int(t) + 1);
  return r;
}

TruthTable make_table(int arity_in, int arity_out,
                      const std::function<std::vector<Trit>(std::span<const Trit>)>& fn) {
  TruthTable t;
  t.arity_in = arity_in;
  t.arity_out = arity_out;
  const std::size_t n = table_rows(arity_in);
  t.rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    auto in = row_inputs(arity_in, r);
    auto out = fn(in);
    if (static_cast<int>(out.size()) != arity_out)
      throw arity_error("table function produced the wrong output count");
    t.rows.push_back(std::move(out));
  }
  return t;
}

void check_table(const TruthTable& t) {
  if (t.arity_in < 0 || t.arity_out < 1)
    throw arity_error("truth table needs at least one output");
  if (t.rows.size() != table_rows(t.arity_in))
    throw arity_error("truth table is incomplete: expected " +
                      std::to_string(table_rows(t.arity_in)) + " rows, found " +
                      std::to_string(t.rows.size()));
  for (const auto& row : t.rows)
    if (static_cast<int>(row.size()) != t.arity_out)
      throw arity_error("truth table row has the wrong output count");
}

std::string var_name(int index) {
  std::string s;
  if (index < 26)
    s += static_cast<char>('A' + index);
  else
    s = "V" + std::to_string(index);
  return s;
}

namespace {

std::vector<std::string> default_names(int n, const char* prefix, bool vars) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(vars ? var_name(i) : prefix + std::to_string(i));
  return names;
}

} // namespace

std::string table_to_text(const TruthTable& t, std::span<const std::string> in_names,
                          std::span<const std::string> out_names) {
  check_table(t);
  auto ins = in_names.empty() ? default_names(t.arity_in, "", true)
                              : std::vector<std::string>(in_names.begin(), in_names.end());
  auto outs = out_names.empty() ? default_names(t.arity_out, "Y", false)
                                : std::vector<std::string>(out_names.begin(), out_names.end());
  std::ostringstream out;
  for (const auto& name : ins)
    out << name << '\t';
  out << '|';
  for (const auto& name : outs)
    out << '\t' << name;
  out << '\n';
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (Trit in : row_inputs(t.arity_in, r))
      out << trit_name(in) << '\t';
    out << '|';
    for (Trit o : t.rows[r])
      out << '\t' << trit_name(o);
    out << '\n';
  }
  return out.str();
}

std::string table_to_csv(const TruthTable& t, std::span<const std::string> in_names,
                         std::span<const std::string> out_names) {
  check_table(t);
  auto ins = in_names.empty() ? default_names(t.arity_in, "", true)
                              : std::vector<std::string>(in_names.begin(), in_names.end());
  auto outs = out_names.empty() ? default_names(t.arity_out, "Y", false)
                                : std::vector<std::string>(out_names.begin(), out_names.end());
  std::ostringstream out;
  bool first = true;
  for (const auto& name : ins) {
    out << (first ? "" : ",") << name;
    first = false;
  }
  for (const auto& name : outs)
    out << ',' << name;
  out << '\n';
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    first = true;
    for (Trit in : row_inputs(t.arity_in, r)) {
      out << (first ? "" : ",") << trit_name(in);
      first = false;
    }
    for (Trit o : t.rows[r])
      out << ',' << trit_name(o);
    out << '\n';
  }
  return out.str();
}

std::string table_to_file_string(const TruthTable& t) {
  check_table(t);
  std::ostringstream out;
  out << "ttab 1\n";
  out << "inputs " << t.arity_in << "\n";
  out << "outputs " << t.arity_out << "\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    bool first = true;
    for (Trit in : row_inputs(t.arity_in, r)) {
      out << (first ? "" : " ") << trit_name(in);
      first = false;
    }
    out << " |";
    for (Trit o : t.rows[r])
      out << ' ' << trit_name(o);
    out << '\n';
  }
  return out.str();
}

TruthTable table_from_file_string(std::string_view text, std::string_view origin) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw parse_error(std::string(origin) + ":" + std::to_string(lineno) + ": " + msg);
  };

  auto next_tokens = [&]() -> std::vector<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::vector<std::string> toks;
      std::string t;
      while (ls >> t) {
        if (t.starts_with('#'))
          break;
        toks.push_back(t);
      }
      if (!toks.empty())
        return toks;
    }
    return {};
  };

  auto magic = next_tokens();
  if (magic.size() != 2 || magic[0] != "ttab" || magic[1] != "1")
    fail("expected 'ttab 1' header");

  auto ins = next_tokens();
  if (ins.size() != 2 || ins[0] != "inputs")
    fail("expected 'inputs <n>'");
  auto outs = next_tokens();
  if (outs.size() != 2 || outs[0] != "outputs")
    fail("expected 'outputs <m>'");

  TruthTable t;
  try {
    t.arity_in = std::stoi(ins[1]);
    t.arity_out = std::stoi(outs[1]);
  } catch (const std::exception&) {
    fail("bad arity value");
  }
  if (t.arity_in < 0 || t.arity_in > 9 || t.arity_out < 1)
    fail("arity out of supported range");

  const std::size_t expect = table_rows(t.arity_in);
  for (std::size_t r = 0; r < expect; ++r) {
    auto toks = next_tokens();
    if (toks.empty())
      fail("missing row " + std::to_string(r + 1) + " of " + std::to_string(expect));
    std::vector<std::string> cleaned;
    for (auto& tok : toks)
      if (tok != "|")
        cleaned.push_back(tok);
    if (cleaned.size() != static_cast<std::size_t>(t.arity_in + t.arity_out))
      fail("row has " + std::to_string(cleaned.size()) + " fields, expected " +
           std::to_string(t.arity_in + t.arity_out));
    std::vector<Trit> row_in, row_out;
    for (std::size_t i = 0; i < cleaned.size(); ++i) {
      auto tr = parse_trit(cleaned[i]);
      if (!tr)
        fail("bad trit '" + cleaned[i] + "'");
      (i < static_cast<std::size_t>(t.arity_in) ? row_in : row_out).push_back(*tr);
    }
    if (row_index(row_in) != r)
      fail("rows must be in canonical input order");
    t.rows.push_back(std::move(row_out));
  }
  if (!next_tokens().empty())
    fail("unexpected trailing content");
  check_table(t);
  return t;
}

TruthTable read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open truth-table file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return table_from_file_string(buf.str(), path.string());
}

void write_table(const TruthTable& t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw parse_error("cannot write truth-table file " + path.string());
  out << table_to_file_string(t);
}

} // namespace bt

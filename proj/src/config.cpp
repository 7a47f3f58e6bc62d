#include "btlogic/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace bt {
namespace {

std::string fmt_double(double v) {
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v)
      break;
  }
  return buf;
}

double parse_double(std::string_view key, std::string_view value, std::string_view origin,
                    int line) {
  try {
    std::size_t pos = 0;
    double d = std::stod(std::string(value), &pos);
    if (pos != value.size() || !std::isfinite(d))
      throw std::invalid_argument("trailing");
    return d;
  } catch (const std::exception&) {
    throw parse_error(std::string(origin) + ":" + std::to_string(line) + ": bad value '" +
                      std::string(value) + "' for " + std::string(key));
  }
}

} // namespace

void check_config(const ToolkitConfig& cfg) {
  const auto& d = cfg.device;
  if (!(cfg.vdd > 0))
    throw range_error("config: vdd must be positive");
  if (!(d.r_hrs > 0 && d.r_lrs > 0 && d.r_on > 0 && d.r_off > 0))
    throw range_error("config: all resistances must be positive");
  if (!(d.r_hrs > d.r_lrs))
    throw range_error("config: r_hrs must exceed r_lrs");
  if (!(d.r_off > d.r_on))
    throw range_error("config: r_off must exceed r_on");
  if (!(d.v_set > 0))
    throw range_error("config: v_set must be positive");
  if (!(d.v_reset < 0))
    throw range_error("config: v_reset must be negative");
  if (!(cfg.solver.kcl_tolerance > 0) || cfg.solver.max_iterations < 1)
    throw range_error("config: bad solver parameters");
}

ToolkitConfig parse_config(std::string_view text, std::string_view origin) {
  ToolkitConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool saw_magic = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key, value;
    if (!(ls >> key) || key.starts_with('#'))
      continue;
    if (!saw_magic) {
      if (key != "btcfg")
        throw parse_error(std::string(origin) + ":1: expected 'btcfg 1' header");
      ls >> value;
      if (value != "1")
        throw parse_error(std::string(origin) + ":1: unsupported config version");
      saw_magic = true;
      continue;
    }
    if (!(ls >> value))
      throw parse_error(std::string(origin) + ":" + std::to_string(lineno) +
                        ": missing value for " + key);
    if (key == "vdd") cfg.vdd = parse_double(key, value, origin, lineno);
    else if (key == "r_hrs") cfg.device.r_hrs = parse_double(key, value, origin, lineno);
    else if (key == "r_lrs") cfg.device.r_lrs = parse_double(key, value, origin, lineno);
    else if (key == "v_set") cfg.device.v_set = parse_double(key, value, origin, lineno);
    else if (key == "v_reset") cfg.device.v_reset = parse_double(key, value, origin, lineno);
    else if (key == "r_on") cfg.device.r_on = parse_double(key, value, origin, lineno);
    else if (key == "r_off") cfg.device.r_off = parse_double(key, value, origin, lineno);
    else if (key == "kcl_tolerance")
      cfg.solver.kcl_tolerance = parse_double(key, value, origin, lineno);
    else if (key == "max_iterations")
      cfg.solver.max_iterations = static_cast<int>(parse_double(key, value, origin, lineno));
    else if (key == "state_epsilon")
      cfg.solver.state_epsilon = parse_double(key, value, origin, lineno);
    else if (key == "format") {
      if (value == "text") cfg.format = OutputFormat::text;
      else if (value == "csv") cfg.format = OutputFormat::csv;
      else
        throw parse_error(std::string(origin) + ":" + std::to_string(lineno) +
                          ": unknown format '" + value + "'");
    } else
      throw parse_error(std::string(origin) + ":" + std::to_string(lineno) +
                        ": unknown config key '" + key + "'");
  }
  if (!saw_magic)
    throw parse_error(std::string(origin) + ": empty config file");
  check_config(cfg);
  return cfg;
}

std::string config_to_string(const ToolkitConfig& cfg) {
  std::string out = "btcfg 1\n";
  out += "vdd " + fmt_double(cfg.vdd) + "\n";
  out += "r_hrs " + fmt_double(cfg.device.r_hrs) + "\n";
  out += "r_lrs " + fmt_double(cfg.device.r_lrs) + "\n";
  out += "v_set " + fmt_double(cfg.device.v_set) + "\n";
  out += "v_reset " + fmt_double(cfg.device.v_reset) + "\n";
  out += "r_on " + fmt_double(cfg.device.r_on) + "\n";
  out += "r_off " + fmt_double(cfg.device.r_off) + "\n";
  out += "kcl_tolerance " + fmt_double(cfg.solver.kcl_tolerance) + "\n";
  out += "max_iterations " + std::to_string(cfg.solver.max_iterations) + "\n";
  out += "state_epsilon " + fmt_double(cfg.solver.state_epsilon) + "\n";
  out += std::string("format ") + (cfg.format == OutputFormat::csv ? "csv" : "text") + "\n";
  return out;
}

ToolkitConfig read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

void write_config(const ToolkitConfig& cfg, const std::filesystem::path& path) {
  check_config(cfg);
  std::ofstream out(path);
  if (!out)
    throw parse_error("cannot write config file " + path.string());
  out << config_to_string(cfg);
}

} // namespace bt

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "btlogic/errors.hpp"

namespace bt {

/// Electrical parameters shared by every device instance of a kind.
/// Defaults give an HRS/LRS ratio of 100, plenty for clean logic levels.
struct DeviceParams {
  double r_hrs = 1e6;    // ohms
  double r_lrs = 1e4;    // ohms
  double v_set = 0.5;    // volts, positive
  double v_reset = -0.35; // volts, negative
  double r_on = 100.0;   // ohms, conducting switch
  double r_off = 1e8;    // ohms, blocking switch
};

struct SolverParams {
  double kcl_tolerance = 1e-9; // amperes
  int max_iterations = 32;
  double state_epsilon = 1e-9; // volts of slack on device thresholds
};

enum class OutputFormat { text, csv };

struct ToolkitConfig {
  double vdd = 1.0;
  DeviceParams device;
  SolverParams solver;
  OutputFormat format = OutputFormat::text;
};

/// Throws range_error if any resistance or voltage constraint is violated.
void check_config(const ToolkitConfig& cfg);

ToolkitConfig parse_config(std::string_view text, std::string_view origin = "<string>");
std::string config_to_string(const ToolkitConfig& cfg);

ToolkitConfig read_config(const std::filesystem::path& path);
void write_config(const ToolkitConfig& cfg, const std::filesystem::path& path);

} // namespace bt

#pragma once

#include <opo/epr.hpp>
#include <opo/quadrature.hpp>
#include <opo/scan_grid.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opo::cli {

// Everything a subcommand needs. Grid counts of 0 mean "use the
// subcommand's default" (128 for farfield, 64 for the Stokes maps).
struct RunConfig {
  OpoParams params;
  QuadratureSpec quadrature;
  bool omega_max_set = false;

  Axis kx{"kx", -1.0, 1.0, 0};
  Axis ky{"ky", -1.0, 1.0, 0};
  Axis psi{"psi_sum", -1.5707963267948966, 1.5707963267948966, 181};
  Axis omega{"omega", -2.0, 2.0, 201};

  DetectionScheme scheme = DetectionScheme::horizontal;
  GainSetting gain = UnitGain{};
  std::optional<double> cut_psi; // empty: locate the optimal phase at omega = 0
  std::string quantity;          // empty: subcommand default

  std::string output; // empty: stdout
  int threads = 0;    // 0: hardware concurrency
  std::uint64_t seed = 12345;
  std::int64_t mc_samples = 100000;
};

// Applies one `key = value` setting. Throws ConfigError (line > 0 when known).
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value, int line = 0);

// Fills derived defaults and checks every invariant; throws ConfigError.
void finalize(RunConfig& cfg);

// Parses a whole document of `key = value` lines with `#` comments, then
// finalizes. An empty document yields the reference parameter set.
RunConfig parse_config(std::string_view text);

// Reads `path`, applies `overrides` (each `key=value`) on top, finalizes.
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides);

std::string_view scheme_name(DetectionScheme s) noexcept;
std::string describe_gain(const GainSetting& g);

} // namespace opo::cli

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "csswg/dynamics1d.hpp"
#include "csswg/dynamics2d.hpp"
#include "csswg/groundstate.hpp"

namespace csswg::cli {

struct GridConfig {
  int nx = 256;
  int ny = 64;
  double Lx = 16.0;
  std::optional<double> Ly;  ///< default ly_factor * sqrt(eps)
  double ly_factor = 8.0;
};

struct ModelConfig {
  double beta = 0.0;
  double g = 0.0;
  std::optional<double> g_tilde;  ///< 1D coupling; default g / sqrt(2 pi eps)
  double eps = 0.1;
  double dt = 1e-3;
  double t_end = 1.0;
  bool current_term = true;
  bool trap_on = true;
  Integrator integrator = Integrator::LawsonRK4;
  GaugeBoundary boundary = GaugeBoundary::FreeSpace;
  double boundary_tolerance = 1e-6;
};

/// Initial state. 1D kinds: oscillator, gaussian, groundstate, file.
/// In 2D the 1D profile is lifted through the ansatz unless kind is file.
struct InitialConfig {
  std::string kind = "oscillator";
  double x0 = 0.0;
  double k0 = 0.0;
  double width = 1.0;
  double noise = 0.0;  ///< relative amplitude of a seeded smooth perturbation
  std::filesystem::path file;
};

struct ReduceConfig {
  std::vector<double> eps_list{0.2, 0.1, 0.05};
  bool align_phase = false;
  bool parallel = true;
  bool consistency = true;
};

struct GroundStateConfig {
  int dimension = 1;
  FlowConfig flow{};
  bool auto_dtau = true;
};

struct RunConfig {
  std::string experiment;
  std::filesystem::path out = "out";
  std::uint64_t seed = 0;
  GridConfig grid;
  ModelConfig model;
  InitialConfig initial;
  int diagnostics_stride = 10;
  int snapshot_stride = 0;  ///< 0: initial and final snapshots only
  ReduceConfig reduce;
  GroundStateConfig groundstate;

  Grid1D grid_1d() const;
  Grid2D grid_2d() const;
  Grid2D grid_2d(double eps) const;
  Params2D params_2d() const;
  Params2D params_2d(double eps) const;
  Params1D params_1d() const;
};

/// Parse a configuration document; unknown keys and type mismatches raise
/// ConfigurationError naming the offending key.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

/// Checks every module guard that applies to `command`.
void validate(const RunConfig& cfg, const std::string& command);

nlohmann::json to_json(const RunConfig& cfg);

}  // namespace csswg::cli

#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "csswg/observables.hpp"

namespace csswg::cli {

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

/// diagnostics.csv: t, mass, energy, boundary_mass, continuity_residual, reduction_error.
class DiagnosticsWriter {
 public:
  explicit DiagnosticsWriter(const std::filesystem::path& path);
  void write(const Diagnostics& d);

 private:
  std::ofstream out_;
};

/// eps, beta, g, residual, quintic_fit, runtime_s.
class ResidualWriter {
 public:
  explicit ResidualWriter(const std::filesystem::path& path);
  void write(double eps, double beta, double g, double residual, double quintic_fit,
             double runtime_s);

 private:
  std::ofstream out_;
};

void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace csswg::cli

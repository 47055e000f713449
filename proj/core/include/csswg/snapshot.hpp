#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "csswg/field.hpp"

namespace csswg {

/// JSON manifest accompanying a raw field dump.
struct SnapshotManifest {
  int dim = 2;
  int nx = 0;
  int ny = 1;
  double Lx = 0.0;
  double Ly = 0.0;
  double t = 0.0;
  std::string name;
  std::optional<double> mu;
};

/// Writes `<base>.bin` (little-endian float64 (re, im) pairs, row-major) and
/// `<base>.json`. Parent directories are created.
void write_snapshot(const std::filesystem::path& base, const Field2D& f, double t,
                    const std::string& name, std::optional<double> mu = std::nullopt);
void write_snapshot(const std::filesystem::path& base, const Field1D& f, double t,
                    const std::string& name, std::optional<double> mu = std::nullopt);

SnapshotManifest read_manifest(const std::filesystem::path& base);
Field2D read_snapshot_2d(const std::filesystem::path& base);
Field1D read_snapshot_1d(const std::filesystem::path& base);

/// `<name>_<t>` with t printed to 6 decimals, the naming used in snapshots/.
std::string snapshot_stem(const std::string& name, double t);

}  // namespace csswg

#include "csswg/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace csswg {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path with_ext(const fs::path& base, const char* ext) {
  fs::path p = base;
  p += ext;
  return p;
}

std::uint64_t to_little(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r |= ((v >> (8 * i)) & 0xffu) << (8 * (7 - i));
    return r;
  } else {
    return v;
  }
}

void write_raw(const fs::path& path, std::span<const cplx> values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  for (const cplx& v : values) {
    const std::uint64_t re = to_little(std::bit_cast<std::uint64_t>(v.real()));
    const std::uint64_t im = to_little(std::bit_cast<std::uint64_t>(v.imag()));
    out.write(reinterpret_cast<const char*>(&re), 8);
    out.write(reinterpret_cast<const char*>(&im), 8);
  }
  if (!out) throw Error("short write to " + path.string());
}

std::vector<cplx> read_raw(const fs::path& path, std::size_t count) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<cplx> values(count);
  for (auto& v : values) {
    std::uint64_t re = 0;
    std::uint64_t im = 0;
    in.read(reinterpret_cast<char*>(&re), 8);
    in.read(reinterpret_cast<char*>(&im), 8);
    v = cplx(std::bit_cast<double>(to_little(re)), std::bit_cast<double>(to_little(im)));
  }
  if (!in) throw InputError("snapshot " + path.string() + " is truncated");
  return values;
}

void write_manifest(const fs::path& path, const SnapshotManifest& m) {
  json j = {{"nx", m.nx}, {"ny", m.ny}, {"Lx", m.Lx}, {"Ly", m.Ly},
            {"t", m.t},   {"name", m.name}, {"dim", m.dim}};
  if (m.mu) j["mu"] = *m.mu;
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
}

void prepare(const fs::path& base) {
  if (base.has_parent_path()) fs::create_directories(base.parent_path());
}

}  // namespace

void write_snapshot(const fs::path& base, const Field2D& f, double t, const std::string& name,
                    std::optional<double> mu) {
  prepare(base);
  const Grid2D& g = f.grid();
  write_raw(with_ext(base, ".bin"), f.values());
  write_manifest(with_ext(base, ".json"),
                 {2, g.nx(), g.ny(), g.x().half_width(), g.y().half_width(), t, name, mu});
}

void write_snapshot(const fs::path& base, const Field1D& f, double t, const std::string& name,
                    std::optional<double> mu) {
  prepare(base);
  const Grid1D& g = f.grid();
  write_raw(with_ext(base, ".bin"), f.values());
  write_manifest(with_ext(base, ".json"), {1, g.size(), 1, g.half_width(), 0.0, t, name, mu});
}

SnapshotManifest read_manifest(const fs::path& base) {
  std::ifstream in(with_ext(base, ".json"));
  if (!in) throw Error("cannot open manifest " + with_ext(base, ".json").string());
  json j;
  try {
    in >> j;
    SnapshotManifest m;
    m.nx = j.at("nx").get<int>();
    m.ny = j.value("ny", 1);
    m.Lx = j.at("Lx").get<double>();
    m.Ly = j.value("Ly", 0.0);
    m.t = j.value("t", 0.0);
    m.name = j.value("name", std::string{});
    m.dim = j.value("dim", m.ny > 1 ? 2 : 1);
    if (j.contains("mu")) m.mu = j["mu"].get<double>();
    return m;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed snapshot manifest: ") + e.what());
  }
}

Field2D read_snapshot_2d(const fs::path& base) {
  const auto m = read_manifest(base);
  if (m.dim != 2) throw InputError("snapshot is not two-dimensional");
  Grid2D grid(m.nx, m.ny, m.Lx, m.Ly);
  return Field2D(grid, read_raw(with_ext(base, ".bin"), grid.size()));
}

Field1D read_snapshot_1d(const fs::path& base) {
  const auto m = read_manifest(base);
  if (m.dim != 1) throw InputError("snapshot is not one-dimensional");
  Grid1D grid(m.nx, m.Lx);
  return Field1D(grid, read_raw(with_ext(base, ".bin"), static_cast<std::size_t>(m.nx)));
}

std::string snapshot_stem(const std::string& name, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%.6f", name.c_str(), t);
  return buf;
}

}  // namespace csswg

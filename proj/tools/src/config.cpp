#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "csswg/reduction.hpp"

namespace csswg::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& where, const std::set<std::string>& keys) {
  if (!obj.is_object()) throw ConfigurationError("config: '" + where + "' must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!keys.contains(key)) {
      throw ConfigurationError("config: unknown key '" + (where.empty() ? key : where + "." + key) +
                               "'");
    }
  }
}

template <typename T>
void read(const json& obj, const std::string& where, const char* key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigurationError("config: key '" + (where.empty() ? std::string(key) : where + "." + key) +
                             "' has the wrong type");
  }
}

template <typename T>
void read(const json& obj, const std::string& where, const char* key, std::optional<T>& out) {
  if (!obj.contains(key) || obj.at(key).is_null()) return;
  T v{};
  read(obj, where, key, v);
  out = v;
}

Integrator parse_integrator(const std::string& s) {
  if (s == "lawson") return Integrator::LawsonRK4;
  if (s == "rk4") return Integrator::ClassicalRK4;
  throw ConfigurationError("config: model.integrator must be 'lawson' or 'rk4'");
}

GaugeBoundary parse_boundary(const std::string& s) {
  if (s == "free_space") return GaugeBoundary::FreeSpace;
  if (s == "periodic") return GaugeBoundary::Periodic;
  throw ConfigurationError("config: model.boundary must be 'free_space' or 'periodic'");
}

}  // namespace

Grid1D RunConfig::grid_1d() const { return Grid1D(grid.nx, grid.Lx); }

Grid2D RunConfig::grid_2d() const { return grid_2d(model.eps); }

Grid2D RunConfig::grid_2d(double eps) const {
  const double ly = grid.Ly ? *grid.Ly : grid.ly_factor * std::sqrt(eps);
  return Grid2D(grid.nx, grid.ny, grid.Lx, ly);
}

Params2D RunConfig::params_2d() const { return params_2d(model.eps); }

Params2D RunConfig::params_2d(double eps) const {
  Params2D p;
  p.beta = model.beta;
  p.g = model.g;
  p.eps = eps;
  p.dt = model.dt;
  p.t_end = model.t_end;
  p.current_term = model.current_term;
  p.trap_on = model.trap_on;
  p.integrator = model.integrator;
  p.boundary = model.boundary;
  p.boundary_tolerance = model.boundary_tolerance;
  return p;
}

Params1D RunConfig::params_1d() const {
  const double gt = model.g_tilde ? *model.g_tilde : effective_coupling(model.g, model.eps);
  return Params1D{model.beta, gt, model.trap_on, model.dt, model.t_end};
}

RunConfig parse_config(const json& doc) {
  RunConfig c;
  reject_unknown(doc, "", {"experiment", "out", "seed", "grid", "model", "initial",
                           "diagnostics_stride", "snapshot_stride", "reduce", "groundstate"});
  read(doc, "", "experiment", c.experiment);
  std::string out = c.out.string();
  read(doc, "", "out", out);
  c.out = out;
  read(doc, "", "seed", c.seed);
  read(doc, "", "diagnostics_stride", c.diagnostics_stride);
  read(doc, "", "snapshot_stride", c.snapshot_stride);

  if (doc.contains("grid")) {
    const json& g = doc.at("grid");
    reject_unknown(g, "grid", {"nx", "ny", "Lx", "Ly", "ly_factor"});
    read(g, "grid", "nx", c.grid.nx);
    read(g, "grid", "ny", c.grid.ny);
    read(g, "grid", "Lx", c.grid.Lx);
    read(g, "grid", "Ly", c.grid.Ly);
    read(g, "grid", "ly_factor", c.grid.ly_factor);
  }
  if (doc.contains("model")) {
    const json& m = doc.at("model");
    reject_unknown(m, "model", {"beta", "g", "g_tilde", "eps", "dt", "t_end", "current_term",
                                "trap_on", "integrator", "boundary", "boundary_tolerance"});
    read(m, "model", "beta", c.model.beta);
    read(m, "model", "g", c.model.g);
    read(m, "model", "g_tilde", c.model.g_tilde);
    read(m, "model", "eps", c.model.eps);
    read(m, "model", "dt", c.model.dt);
    read(m, "model", "t_end", c.model.t_end);
    read(m, "model", "current_term", c.model.current_term);
    read(m, "model", "trap_on", c.model.trap_on);
    read(m, "model", "boundary_tolerance", c.model.boundary_tolerance);
    std::string s;
    if (m.contains("integrator")) {
      read(m, "model", "integrator", s);
      c.model.integrator = parse_integrator(s);
    }
    if (m.contains("boundary")) {
      read(m, "model", "boundary", s);
      c.model.boundary = parse_boundary(s);
    }
  }
  if (doc.contains("initial")) {
    const json& i = doc.at("initial");
    reject_unknown(i, "initial", {"kind", "x0", "k0", "width", "noise", "file"});
    read(i, "initial", "kind", c.initial.kind);
    read(i, "initial", "x0", c.initial.x0);
    read(i, "initial", "k0", c.initial.k0);
    read(i, "initial", "width", c.initial.width);
    read(i, "initial", "noise", c.initial.noise);
    std::string f;
    read(i, "initial", "file", f);
    c.initial.file = f;
  }
  if (doc.contains("reduce")) {
    const json& r = doc.at("reduce");
    reject_unknown(r, "reduce", {"eps_list", "align_phase", "parallel", "consistency"});
    read(r, "reduce", "eps_list", c.reduce.eps_list);
    read(r, "reduce", "align_phase", c.reduce.align_phase);
    read(r, "reduce", "parallel", c.reduce.parallel);
    read(r, "reduce", "consistency", c.reduce.consistency);
  }
  if (doc.contains("groundstate")) {
    const json& gs = doc.at("groundstate");
    reject_unknown(gs, "groundstate", {"dimension", "dtau", "tol", "max_iters", "residual_tol"});
    read(gs, "groundstate", "dimension", c.groundstate.dimension);
    if (gs.contains("dtau")) {
      read(gs, "groundstate", "dtau", c.groundstate.flow.dtau);
      c.groundstate.auto_dtau = false;
    }
    read(gs, "groundstate", "tol", c.groundstate.flow.tol);
    read(gs, "groundstate", "max_iters", c.groundstate.flow.max_iters);
    read(gs, "groundstate", "residual_tol", c.groundstate.flow.residual_tol);
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("config: cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigurationError(std::string("config: invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

void validate(const RunConfig& c, const std::string& command) {
  if (c.diagnostics_stride < 1) throw ConfigurationError("guard diagnostics_stride >= 1 violated");
  if (c.snapshot_stride < 0) throw ConfigurationError("guard snapshot_stride >= 0 violated");
  const std::set<std::string> kinds{"oscillator", "gaussian", "groundstate", "file"};
  if (!kinds.contains(c.initial.kind)) {
    throw ConfigurationError("config: initial.kind must be one of oscillator, gaussian, groundstate, file");
  }
  if (c.initial.kind == "file" && c.initial.file.empty()) {
    throw ConfigurationError("guard initial.file set when initial.kind is 'file' violated");
  }
  if (!(c.initial.width > 0.0)) throw ConfigurationError("guard initial.width > 0 violated");
  if (!(c.initial.noise >= 0.0)) throw ConfigurationError("guard initial.noise >= 0 violated");

  c.grid_1d();  // point count and half-width guards
  auto check_2d = [&](double eps) {
    const Params2D p = c.params_2d(eps);
    p.validate();
    const Grid2D g = c.grid_2d(eps);
    build_profile(eps, g.y());  // Ly >= 6 sqrt(eps), dy <= sqrt(eps)/4
  };

  if (command == "run1d") {
    c.params_1d().validate();
  } else if (command == "run2d") {
    check_2d(c.model.eps);
  } else if (command == "reduce") {
    if (c.reduce.eps_list.empty()) throw ConfigurationError("guard reduce.eps_list non-empty violated");
    if (c.grid.Ly) throw ConfigurationError("config: reduce sizes Ly per eps; use grid.ly_factor");
    if (c.model.boundary != GaugeBoundary::FreeSpace) {
      throw ConfigurationError("config: reduce requires model.boundary 'free_space'");
    }
    for (double eps : c.reduce.eps_list) check_2d(eps);
  } else if (command == "groundstate") {
    if (c.groundstate.dimension != 1 && c.groundstate.dimension != 2) {
      throw ConfigurationError("guard groundstate.dimension in {1, 2} violated");
    }
    c.groundstate.flow.validate();
    if (c.groundstate.dimension == 1) {
      const Params1D p = c.params_1d();
      if (!p.trap_on && p.g_tilde > 0.0 && p.beta == 0.0) {
        throw ConfigurationError(
            "guard quintic term present (beta != 0) for an untrapped focusing flow violated");
      }
    } else {
      check_2d(c.model.eps);
    }
  } else if (command != "selfcheck") {
    throw ConfigurationError("unknown subcommand '" + command + "'");
  }
}

json to_json(const RunConfig& c) {
  json j;
  j["experiment"] = c.experiment;
  j["out"] = c.out.string();
  j["seed"] = c.seed;
  j["grid"] = {{"nx", c.grid.nx}, {"ny", c.grid.ny}, {"Lx", c.grid.Lx}, {"ly_factor", c.grid.ly_factor}};
  if (c.grid.Ly) j["grid"]["Ly"] = *c.grid.Ly;
  j["model"] = {{"beta", c.model.beta},
                {"g", c.model.g},
                {"eps", c.model.eps},
                {"dt", c.model.dt},
                {"t_end", c.model.t_end},
                {"current_term", c.model.current_term},
                {"trap_on", c.model.trap_on},
                {"integrator", c.model.integrator == Integrator::LawsonRK4 ? "lawson" : "rk4"},
                {"boundary", c.model.boundary == GaugeBoundary::FreeSpace ? "free_space" : "periodic"},
                {"boundary_tolerance", c.model.boundary_tolerance}};
  if (c.model.g_tilde) j["model"]["g_tilde"] = *c.model.g_tilde;
  j["initial"] = {{"kind", c.initial.kind}, {"x0", c.initial.x0},     {"k0", c.initial.k0},
                  {"width", c.initial.width}, {"noise", c.initial.noise}, {"file", c.initial.file.string()}};
  j["diagnostics_stride"] = c.diagnostics_stride;
  j["snapshot_stride"] = c.snapshot_stride;
  j["reduce"] = {{"eps_list", c.reduce.eps_list},
                 {"align_phase", c.reduce.align_phase},
                 {"parallel", c.reduce.parallel},
                 {"consistency", c.reduce.consistency}};
  j["groundstate"] = {{"dimension", c.groundstate.dimension},
                      {"tol", c.groundstate.flow.tol},
                      {"max_iters", c.groundstate.flow.max_iters},
                      {"residual_tol", c.groundstate.flow.residual_tol}};
  if (!c.groundstate.auto_dtau) j["groundstate"]["dtau"] = c.groundstate.flow.dtau;
  return j;
}

}  // namespace csswg::cli

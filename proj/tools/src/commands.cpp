#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <numbers>
#include <random>

#include "csswg/gauge.hpp"
#include "csswg/groundstate.hpp"
#include "csswg/observables.hpp"
#include "csswg/quadrature.hpp"
#include "csswg/reduction.hpp"
#include "csswg/snapshot.hpp"
#include "output.hpp"

namespace csswg::cli {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::filesystem::path snapshot_base(const std::filesystem::path& dir, const std::string& name,
                                    double t) {
  return dir / "snapshots" / snapshot_stem(name, t);
}

bool snapshot_due(const RunConfig& cfg, long step, long n_steps) {
  if (step == 0 || step == n_steps) return true;
  return cfg.snapshot_stride > 0 && step % cfg.snapshot_stride == 0;
}

long step_count(double t_end, double dt) { return std::lround(t_end / dt); }

// Seeded smooth perturbation: a few random complex Gaussians.
void perturb(Field1D& phi, double noise, std::uint64_t seed) {
  if (noise <= 0.0) return;
  const double m0 = mass(phi);
  double peak = 0.0;
  for (const auto& v : phi.values()) peak = std::max(peak, std::abs(v));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Grid1D& g = phi.grid();
  for (int b = 0; b < 4; ++b) {
    const double c = 0.25 * g.half_width() * u(rng);
    const double w = 0.5 + 0.5 * std::abs(u(rng));
    const cplx a(u(rng), u(rng));
    for (int i = 0; i < g.size(); ++i) {
      const double x = g.point(i) - c;
      phi[i] += noise * peak * a * std::exp(-0.5 * x * x / (w * w));
    }
  }
  phi *= cplx(std::sqrt(m0 / mass(phi)), 0.0);
}

json diagnostics_json(const Diagnostics& d) {
  json j{{"t", d.t}, {"mass", d.mass}, {"energy", d.energy}, {"boundary_mass", d.boundary_mass}};
  if (d.continuity_residual) j["continuity_residual"] = *d.continuity_residual;
  if (d.reduction_error) j["reduction_error"] = *d.reduction_error;
  return j;
}

FlowConfig flow_for_1d(const RunConfig& cfg) { return cfg.groundstate.flow; }

FlowConfig flow_for_2d(const RunConfig& cfg, const Model2D& m) {
  FlowConfig f = cfg.groundstate.flow;
  if (cfg.groundstate.auto_dtau) f.dtau = default_dtau_2d(m);
  return f;
}

int run1d(const RunConfig& cfg, std::ostream& log) {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid1D grid = cfg.grid_1d();
  const Model1D model(grid, cfg.params_1d());
  State1D s{initial_profile(cfg, grid), 0.0, 0};
  const long n_steps = step_count(model.params().t_end, model.params().dt);

  DiagnosticsWriter diag(cfg.out / "diagnostics.csv");
  const Diagnostics d0 = diagnose(s.psi, 0.0, model);
  double mass_drift = 0.0, energy_drift = 0.0;
  auto sample = [&] {
    const Diagnostics d = diagnose(s.psi, s.t, model);
    diag.write(d);
    mass_drift = std::max(mass_drift, std::abs(d.mass - d0.mass) / d0.mass);
    energy_drift = std::max(energy_drift, std::abs(d.energy - d0.energy) / std::abs(d0.energy));
    return d;
  };
  sample();
  write_snapshot(snapshot_base(cfg.out, "phi", 0.0), s.psi, 0.0, "phi");
  Diagnostics last = d0;
  for (long n = 1; n <= n_steps; ++n) {
    step_1d(model, s);
    if (n % cfg.diagnostics_stride == 0 || n == n_steps) last = sample();
    if (snapshot_due(cfg, n, n_steps)) write_snapshot(snapshot_base(cfg.out, "phi", s.t), s.psi, s.t, "phi");
  }
  const double runtime = seconds_since(t0);
  write_json(cfg.out / "summary.json",
             {{"command", "run1d"},
              {"steps", n_steps},
              {"initial", diagnostics_json(d0)},
              {"final", diagnostics_json(last)},
              {"max_mass_drift", mass_drift},
              {"max_energy_drift", energy_drift},
              {"runtime_s", runtime},
              {"config", to_json(cfg)}});
  log << "run1d: " << n_steps << " steps, energy drift " << energy_drift << ", " << runtime << " s\n";
  return kOk;
}

Field2D initial_state_2d(const RunConfig& cfg, const Model2D& model) {
  const Grid2D& grid = model.grid();
  if (cfg.initial.kind == "file") {
    Field2D psi = read_snapshot_2d(cfg.initial.file);
    if (!(psi.grid() == grid)) throw ConfigurationError("guard initial.file grid matches config grid violated");
    return psi;
  }
  if (cfg.initial.kind == "groundstate") {
    return ground_state_2d(model, flow_for_2d(cfg, model)).psi;
  }
  const Reduction red(grid, model.params().eps);
  return red.build_ansatz(initial_profile(cfg, grid.x()), model.params().beta);
}

int run2d(const RunConfig& cfg, std::ostream& log) {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid2D grid = cfg.grid_2d();
  const Model2D model(grid, cfg.params_2d());
  State2D s{initial_state_2d(cfg, model), 0.0, 0};
  const long n_steps = step_count(model.params().t_end, model.params().dt);

  DiagnosticsWriter diag(cfg.out / "diagnostics.csv");
  const Diagnostics d0 = diagnose(s.psi, 0.0, model);
  diag.write(d0);
  write_snapshot(snapshot_base(cfg.out, "psi", 0.0), s.psi, 0.0, "psi");
  double mass_drift = 0.0, energy_drift = 0.0, continuity = 0.0;
  Diagnostics last = d0;
  for (long n = 1; n <= n_steps; ++n) {
    const bool sample = n % cfg.diagnostics_stride == 0 || n == n_steps;
    std::optional<Field2D> prev;
    if (sample) prev = s.psi;
    step_2d(model, s);
    if (sample) {
      Diagnostics d = diagnose(s.psi, s.t, model);
      d.continuity_residual = continuity_residual(*prev, s.psi, model.params().dt, model);
      diag.write(d);
      mass_drift = std::max(mass_drift, std::abs(d.mass - d0.mass) / d0.mass);
      energy_drift = std::max(energy_drift, std::abs(d.energy - d0.energy) / std::abs(d0.energy));
      continuity = std::max(continuity, *d.continuity_residual);
      last = d;
    }
    if (snapshot_due(cfg, n, n_steps)) write_snapshot(snapshot_base(cfg.out, "psi", s.t), s.psi, s.t, "psi");
  }
  const double runtime = seconds_since(t0);
  write_json(cfg.out / "summary.json",
             {{"command", "run2d"},
              {"steps", n_steps},
              {"initial", diagnostics_json(d0)},
              {"final", diagnostics_json(last)},
              {"max_mass_drift", mass_drift},
              {"max_energy_drift", energy_drift},
              {"max_continuity_residual", continuity},
              {"runtime_s", runtime},
              {"config", to_json(cfg)}});
  log << "run2d: " << n_steps << " steps, energy drift " << energy_drift << ", " << runtime << " s\n";
  return kOk;
}

std::string leg_name(double eps) { return "eps_" + format_number(eps); }

int reduce(const RunConfig& cfg, std::ostream& log) {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid1D gx = cfg.grid_1d();
  const Field1D phi0 = initial_profile(cfg, gx);

  auto leg = [&](double eps) {
    ReduceOptions o;
    o.beta = cfg.model.beta;
    o.g = cfg.model.g;
    o.eps = eps;
    o.dt = cfg.model.dt;
    o.t_end = cfg.model.t_end;
    o.nx = cfg.grid.nx;
    o.ny = cfg.grid.ny;
    o.Lx = cfg.grid.Lx;
    o.ly_factor = cfg.grid.ly_factor;
    o.sample_stride = cfg.diagnostics_stride;
    o.align_phase = cfg.reduce.align_phase;
    o.integrator = cfg.model.integrator;
    const std::filesystem::path dir = cfg.out / leg_name(eps);
    const long n_steps = step_count(o.t_end, o.dt);
    ReduceResult r = reduce_leg(phi0, o, [&](double t, const Field2D& psi, const Field1D& phi) {
      const long n = std::lround(t / o.dt);
      if (!snapshot_due(cfg, n, n_steps)) return;
      write_snapshot(snapshot_base(dir, "psi", t), psi, t, "psi");
      write_snapshot(snapshot_base(dir, "phi", t), phi, t, "phi");
    });
    DiagnosticsWriter d2(dir / "diagnostics.csv");
    DiagnosticsWriter d1(dir / "diagnostics_1d.csv");
    for (const auto& smp : r.samples) {
      d2.write(smp.diag2d);
      d1.write(smp.diag1d);
    }
    r.final_2d.reset();
    r.final_1d.reset();
    return r;
  };

  std::vector<ReduceResult> results;
  if (cfg.reduce.parallel && cfg.reduce.eps_list.size() > 1) {
    std::vector<std::future<ReduceResult>> futures;
    for (double eps : cfg.reduce.eps_list) futures.push_back(std::async(std::launch::async, leg, eps));
    for (auto& f : futures) results.push_back(f.get());
  } else {
    for (double eps : cfg.reduce.eps_list) results.push_back(leg(eps));
  }

  json legs = json::array();
  bool monotone = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const ReduceResult& r = results[i];
    legs.push_back({{"eps", r.eps},
                    {"sup_error", r.sup_error},
                    {"mass_drift_2d", r.mass_drift_2d},
                    {"energy_drift_2d", r.energy_drift_2d},
                    {"mass_drift_1d", r.mass_drift_1d},
                    {"energy_drift_1d", r.energy_drift_1d},
                    {"max_continuity_residual", r.max_continuity},
                    {"runtime_s", r.runtime_s}});
    if (i > 0 && (r.eps < results[i - 1].eps) != (r.sup_error < results[i - 1].sup_error)) monotone = false;
    log << "reduce: eps " << r.eps << " sup error " << r.sup_error << " (" << r.runtime_s << " s)\n";
  }

  json table = json::array();
  if (cfg.reduce.consistency) {
    ResidualWriter rw(cfg.out / "residuals.csv");
    for (double eps : cfg.reduce.eps_list) {
      const ConsistencyRow row = rhs_consistency(phi0, cfg.model.beta, cfg.model.g, eps);
      rw.write(row.eps, row.beta, row.g, row.residual, row.quintic_fit, row.runtime_s);
      table.push_back({{"eps", row.eps}, {"residual", row.residual}, {"quintic_fit", row.quintic_fit}});
    }
  }
  write_json(cfg.out / "summary.json", {{"command", "reduce"},
                                        {"legs", legs},
                                        {"sup_error_monotone_in_eps", monotone},
                                        {"consistency", table},
                                        {"runtime_s", seconds_since(t0)},
                                        {"config", to_json(cfg)}});
  return kOk;
}

int groundstate(const RunConfig& cfg, std::ostream& log) {
  const auto t0 = std::chrono::steady_clock::now();
  json summary{{"command", "groundstate"}, {"dimension", cfg.groundstate.dimension}};
  std::vector<double> energies;
  if (cfg.groundstate.dimension == 1) {
    const Grid1D grid = cfg.grid_1d();
    const Model1D model(grid, cfg.params_1d());
    std::optional<Field1D> start;
    if (cfg.initial.kind != "groundstate") start = initial_profile(cfg, grid);
    const GroundState1D gs = ground_state_1d(model, flow_for_1d(cfg), start);
    write_snapshot(snapshot_base(cfg.out, "groundstate", 0.0), gs.psi, 0.0, "groundstate", gs.mu);
    summary.update({{"mu", gs.mu}, {"energy", gs.energy}, {"residual", gs.residual}, {"iterations", gs.iterations}});
    energies = gs.energies;
  } else {
    const Grid2D grid = cfg.grid_2d();
    const Model2D model(grid, cfg.params_2d());
    std::optional<Field2D> start;
    if (cfg.initial.kind != "groundstate") start = initial_state_2d(cfg, model);
    const GroundState2D gs = ground_state_2d(model, flow_for_2d(cfg, model), start);
    write_snapshot(snapshot_base(cfg.out, "groundstate", 0.0), gs.psi, 0.0, "groundstate", gs.mu);
    summary.update({{"mu", gs.mu}, {"energy", gs.energy}, {"residual", gs.residual}, {"iterations", gs.iterations}});
    energies = gs.energies;
  }
  {
    std::ofstream flow = [&] {
      std::filesystem::create_directories(cfg.out);
      return std::ofstream(cfg.out / "flow.csv");
    }();
    flow << "iteration,energy\n";
    for (std::size_t i = 0; i < energies.size(); ++i) flow << i << ',' << format_number(energies[i]) << '\n';
  }
  summary["runtime_s"] = seconds_since(t0);
  summary["config"] = to_json(cfg);
  write_json(cfg.out / "summary.json", summary);
  log << "groundstate: mu " << summary["mu"].get<double>() << ", E " << summary["energy"].get<double>()
      << " after " << summary["iterations"].get<int>() << " iterations\n";
  return kOk;
}

struct Check {
  std::string name;
  double value;
  double tolerance;
  bool pass() const { return std::isfinite(value) && value < tolerance; }
};

std::vector<Check> selfcheck_checks(std::uint64_t seed) {
  std::vector<Check> checks;
  for (double eps : {0.5, 0.2, 0.1, 0.05}) {
    const Grid1D y(64, 8.0 * std::sqrt(eps));
    const TransverseProfile p = build_profile(eps, y);
    double fu = 0.0, ffu = 0.0;
    for (std::size_t i = 0; i < p.u.size(); ++i) {
      fu += p.f[i] * p.u[i] * p.u[i];
      ffu += p.f[i] * p.f[i] * p.u[i] * p.u[i];
    }
    const std::string tag = " eps=" + format_number(eps);
    checks.push_back({"int f u^2 = 0" + tag, std::abs(fu * y.spacing()), 1e-8});
    checks.push_back({"int f^2 u^2 = 1/3" + tag, std::abs(ffu * y.spacing() - 1.0 / 3.0), 1e-6});
  }

  {
    const Grid2D g(256, 256, 8.0, 8.0);
    const GaugeSolver solver(g, GaugeBoundary::Periodic);
    const Spectral2D sp(g);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double beta = 1.0;
    double curl_err = 0.0, div_err = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      double cx[3], cy[3], s[3], w[3];
      for (int b = 0; b < 3; ++b) {
        cx[b] = 2.0 * u(rng);
        cy[b] = 2.0 * u(rng);
        s[b] = 0.6 + 0.3 * std::abs(u(rng));
        w[b] = 0.5 + std::abs(u(rng));
      }
      const RealField2D rho = sample<double>(g, [&](double x, double y) {
        double v = 0.0;
        for (int b = 0; b < 3; ++b)
          v += w[b] * std::exp(-0.5 * ((x - cx[b]) * (x - cx[b]) + (y - cy[b]) * (y - cy[b])) / (s[b] * s[b]));
        return v;
      });
      const VectorField2D A = solver.vector_potential(rho, beta);
      const double mean = integrate(rho) / (4.0 * g.x().half_width() * g.y().half_width());
      RealField2D r = sp.curl(A);
      RealField2D ref(g);
      for (std::size_t i = 0; i < r.size(); ++i) {
        ref[i] = 2.0 * kPi * beta * rho[i];
        r[i] -= 2.0 * kPi * beta * (rho[i] - mean);
      }
      curl_err = std::max(curl_err, l2_norm(r) / l2_norm(ref));
      const double a_norm = std::hypot(l2_norm(A.x), l2_norm(A.y));
      div_err = std::max(div_err, l2_norm(sp.div(A)) / a_norm * g.x().half_width());
    }
    checks.push_back({"curl A = 2 pi beta (rho - mean)", curl_err, 1e-8});
    checks.push_back({"div A = 0", div_err, 1e-8});
  }

  {
    const double eps = 0.05;
    const Grid2D g = reference_grid(eps, 128, 64, 8.0);
    const Reduction red(g, eps);
    for (double beta : {0.5, 1.0}) {
      for (double gc : {0.0, 1.0}) {
        const Field1D phi = sample<cplx>(g.x(), [](double x) {
          return std::pow(kPi, -0.25) * std::exp(-0.5 * (x - 0.2) * (x - 0.2)) * std::polar(1.0, 0.7 * x);
        });
        Params2D p;
        p.eps = eps;
        p.beta = beta;
        p.g = gc;
        const double e1 = energy_1d(phi, Params1D{beta, effective_coupling(gc, eps), true, 1e-3, 0.0});
        const double e2 = energy_2d(red.build_ansatz(phi, beta), Model2D(g, p));
        checks.push_back({"E2D[ansatz] = E1D beta=" + format_number(beta) + " g=" + format_number(gc),
                          std::abs(e2 - e1) / std::abs(e1), 1e-6});
      }
      const Field1D phi = oscillator_ground_state(g.x());
      checks.push_back({"project(ansatz) round trip beta=" + format_number(beta),
                        l2_norm(red.project(red.build_ansatz(phi, beta), beta) - phi), 1e-8});
    }
  }

  {
    const Field1D phi = oscillator_ground_state(Grid1D(256, 8.0));
    checks.push_back({"rhs consistency beta=g=0", rhs_consistency(phi, 0.0, 0.0, 0.1).residual, 1e-8});
    const ConsistencyRow row = rhs_consistency(phi, 1.0, 0.0, 0.1);
    checks.push_back({"quintic fit / pi^2 beta^2 - 1", std::abs(row.quintic_fit / (kPi * kPi) - 1.0), 0.05});
    checks.push_back({"quintic split ratio - 3",
                      std::abs(row.quintic_fit / row.quintic_fit_no_current - 3.0), 0.15});
  }

  {
    const Grid1D g(256, 8.0);
    const Model1D m(g, Params1D{0.0, 0.0, true, 1e-3, 1.0});
    const Field1D phi0 = oscillator_ground_state(g);
    Field1D expected = phi0;
    expected *= std::polar(1.0, -1.0);
    checks.push_back({"1D eigenstate phase e^{-it}", l2_norm(evolve_1d(m, phi0).psi - expected), 1e-6});
  }
  return checks;
}

int selfcheck(const RunConfig& cfg, std::ostream& log) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Check> checks = selfcheck_checks(cfg.seed);
  json rows = json::array();
  bool all = true;
  char line[160];
  for (const Check& c : checks) {
    std::snprintf(line, sizeof line, "%-44s %12.3e  < %8.1e  %s\n", c.name.c_str(), c.value, c.tolerance,
                  c.pass() ? "PASS" : "FAIL");
    log << line;
    rows.push_back({{"check", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass()}});
    all = all && c.pass();
  }
  write_json(cfg.out / "summary.json",
             {{"command", "selfcheck"}, {"checks", rows}, {"all_pass", all}, {"runtime_s", seconds_since(t0)}});
  return all ? kOk : kNumerical;
}

}  // namespace

Field1D initial_profile(const RunConfig& cfg, const Grid1D& grid) {
  const InitialConfig& ic = cfg.initial;
  Field1D phi(grid);
  if (ic.kind == "file") {
    phi = read_snapshot_1d(ic.file);
    if (!(phi.grid() == grid)) throw ConfigurationError("guard initial.file grid matches config grid violated");
  } else if (ic.kind == "groundstate") {
    phi = ground_state_1d(Model1D(grid, cfg.params_1d()), flow_for_1d(cfg)).psi;
  } else if (ic.kind == "gaussian") {
    phi = sample<cplx>(grid, [&](double x) {
      const double s = (x - ic.x0) / ic.width;
      return std::exp(-0.5 * s * s) * std::polar(1.0, ic.k0 * x);
    });
    phi *= cplx(1.0 / l2_norm(phi), 0.0);
  } else {
    phi = oscillator_ground_state(grid);
  }
  perturb(phi, ic.noise, cfg.seed);
  return phi;
}

int run_command(const std::string& command, const RunConfig& cfg, std::ostream& log) {
  validate(cfg, command);
  if (command == "run1d") return run1d(cfg, log);
  if (command == "run2d") return run2d(cfg, log);
  if (command == "reduce") return reduce(cfg, log);
  if (command == "groundstate") return groundstate(cfg, log);
  return selfcheck(cfg, log);
}

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const InstabilityError*>(&e) || dynamic_cast<const DomainOverflowError*>(&e) ||
      dynamic_cast<const ConvergenceError*>(&e)) {
    return kNumerical;
  }
  return kValidation;
}

}  // namespace csswg::cli

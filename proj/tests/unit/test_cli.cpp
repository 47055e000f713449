#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"

using namespace csswg;
using namespace csswg::cli;
using nlohmann::json;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("csswg_cli_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::string first_line(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string guard_message(const RunConfig& c, const std::string& command) {
  try {
    validate(c, command);
  } catch (const ConfigurationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Config, ParsesNestedBlocks) {
  const RunConfig c = parse_config(json::parse(R"({
    "seed": 9, "out": "x",
    "grid": {"nx": 128, "ny": 32, "Lx": 12, "ly_factor": 7},
    "model": {"beta": 0.5, "g": 1, "eps": 0.2, "dt": 5e-4, "t_end": 2, "integrator": "rk4",
              "boundary": "periodic", "current_term": false},
    "initial": {"kind": "gaussian", "x0": 1, "k0": 2, "width": 0.5},
    "reduce": {"eps_list": [0.5, 0.2]},
    "groundstate": {"dimension": 2, "dtau": 1e-4}
  })"));
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.grid.nx, 128);
  EXPECT_DOUBLE_EQ(c.grid_2d().y().half_width(), 7.0 * std::sqrt(0.2));
  EXPECT_EQ(c.model.integrator, Integrator::ClassicalRK4);
  EXPECT_EQ(c.model.boundary, GaugeBoundary::Periodic);
  EXPECT_FALSE(c.params_2d().current_term);
  EXPECT_EQ(c.reduce.eps_list.size(), 2u);
  EXPECT_FALSE(c.groundstate.auto_dtau);
  EXPECT_DOUBLE_EQ(c.params_1d().g_tilde, effective_coupling(1.0, 0.2));
  // round trip through the serialized form
  const RunConfig back = parse_config(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
}

TEST(Config, RejectsUnknownKeysAndWrongTypes) {
  EXPECT_THROW(parse_config(json::parse(R"({"grid": {"nz": 4}})")), ConfigurationError);
  EXPECT_THROW(parse_config(json::parse(R"({"model": {"beta": "big"}})")), ConfigurationError);
  EXPECT_THROW(parse_config(json::parse(R"({"model": {"integrator": "euler"}})")), ConfigurationError);
  EXPECT_THROW(parse_config(json::parse(R"([1, 2])")), ConfigurationError);
}

TEST(Config, GuardViolationsNameTheGuard) {
  RunConfig c;
  c.model.eps = 0.01;
  c.model.dt = 0.01;
  EXPECT_NE(guard_message(c, "run2d").find("dt*(1/eps) <= 0.5"), std::string::npos);

  c = RunConfig{};
  c.grid.ly_factor = 5.0;
  EXPECT_NE(guard_message(c, "run2d").find("Ly >= 6 sqrt(eps)"), std::string::npos);

  c = RunConfig{};
  c.grid.ny = 16;
  EXPECT_NE(guard_message(c, "reduce").find("dy <= sqrt(eps)/4"), std::string::npos);

  c = RunConfig{};
  c.grid.nx = 100;
  EXPECT_NE(guard_message(c, "run1d").find("power of two"), std::string::npos);

  c = RunConfig{};
  c.model.trap_on = false;
  c.model.g = 1.0;
  EXPECT_NE(guard_message(c, "groundstate").find("quintic term present"), std::string::npos);

  EXPECT_TRUE(guard_message(RunConfig{}, "reduce").empty());
}

TEST(Commands, ExitCodesFollowErrorKind) {
  EXPECT_EQ(exit_code_for(ConfigurationError("x")), kValidation);
  EXPECT_EQ(exit_code_for(InputError("x")), kValidation);
  EXPECT_EQ(exit_code_for(InstabilityError(0.1)), kNumerical);
  EXPECT_EQ(exit_code_for(DomainOverflowError(1e-3, 1e-6)), kNumerical);
  EXPECT_EQ(exit_code_for(ConvergenceError("x", "")), kNumerical);
}

TEST(Commands, Run1DIsBitReproducible) {
  RunConfig c = parse_config(json::parse(R"({
    "grid": {"nx": 128, "Lx": 8}, "model": {"beta": 1, "g": 1, "eps": 0.1, "t_end": 0.2},
    "initial": {"kind": "gaussian", "x0": 0.3, "k0": 1, "noise": 0.2}, "seed": 5,
    "diagnostics_stride": 20, "snapshot_stride": 100
  })"));
  std::ostringstream log;
  c.out = scratch("a");
  ASSERT_EQ(run_command("run1d", c, log), kOk);
  const std::filesystem::path a = c.out;
  c.out = scratch("b");
  ASSERT_EQ(run_command("run1d", c, log), kOk);
  EXPECT_EQ(slurp(a / "diagnostics.csv"), slurp(c.out / "diagnostics.csv"));
  EXPECT_EQ(first_line(a / "diagnostics.csv"),
            "t,mass,energy,boundary_mass,continuity_residual,reduction_error");
  EXPECT_TRUE(std::filesystem::exists(a / "snapshots" / "phi_0.100000.bin"));
  EXPECT_TRUE(std::filesystem::exists(a / "snapshots" / "phi_0.200000.json"));
  const json summary = json::parse(slurp(a / "summary.json"));
  EXPECT_LT(summary["max_mass_drift"].get<double>(), 1e-13);

  // a different seed changes the perturbed initial state
  c.seed = 6;
  c.out = scratch("c");
  ASSERT_EQ(run_command("run1d", c, log), kOk);
  EXPECT_NE(slurp(a / "diagnostics.csv"), slurp(c.out / "diagnostics.csv"));
}

TEST(Commands, Run2DReportsOverflow) {
  RunConfig c = parse_config(json::parse(R"({
    "grid": {"nx": 64, "ny": 64, "Lx": 8}, "model": {"eps": 0.2, "t_end": 0.01},
    "initial": {"kind": "gaussian", "x0": 6.5}
  })"));
  c.out = scratch("overflow");
  std::ostringstream log;
  EXPECT_THROW(run_command("run2d", c, log), DomainOverflowError);
}

TEST(Commands, ShortReduceWritesPerLegOutputs) {
  RunConfig c = parse_config(json::parse(R"({
    "grid": {"nx": 64, "Lx": 8}, "model": {"beta": 0, "g": 0, "t_end": 0.02},
    "reduce": {"eps_list": [0.2, 0.1], "consistency": true}
  })"));
  c.out = scratch("reduce");
  std::ostringstream log;
  ASSERT_EQ(run_command("reduce", c, log), kOk);
  const json s = json::parse(slurp(c.out / "summary.json"));
  ASSERT_EQ(s["legs"].size(), 2u);
  for (const auto& leg : s["legs"]) EXPECT_LT(leg["sup_error"].get<double>(), 1e-6);
  EXPECT_TRUE(std::filesystem::exists(c.out / "eps_0.2" / "diagnostics.csv"));
  EXPECT_TRUE(std::filesystem::exists(c.out / "eps_0.1" / "diagnostics_1d.csv"));
  EXPECT_EQ(first_line(c.out / "residuals.csv"), "eps,beta,g,residual,quintic_fit,runtime_s");
}

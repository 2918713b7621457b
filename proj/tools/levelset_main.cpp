#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "levelset/cell.hpp"
#include "levelset/experiments.hpp"
#include "levelset/oracles.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerics = 3;
constexpr int kExitIo = 4;

int run_cmd(const std::string& config, const std::string& out) {
  const auto report = levelset::run_config_file(config, out);
  if (report.contains("artifact_dir"))
    std::cout << "artifacts: " << report["artifact_dir"].get<std::string>() << "\n";
  if (report.contains("warnings"))
    for (const auto& w : report["warnings"])
      std::cout << "warning: " << w.get<std::string>() << "\n";
  return 0;
}

int report_cmd(const std::string& dir) {
  levelset::report_artifacts(dir, std::cout);
  return 0;
}

int cell_cmd(double h1_value, double h2_value, double theta, double v0, long samples) {
  const auto profile = levelset::PeriodicProfile::two_phase(h1_value, h2_value, theta);
  std::cout << "# lambda=" << levelset::cell_lambda(profile) << "\n";
  std::cout << "tau,v\n";
  for (long i = 0; i < samples; ++i) {
    const double tau = static_cast<double>(i) / static_cast<double>(samples - 1);
    std::cout << tau << "," << levelset::cell_corrector(profile, v0, tau) << "\n";
  }
  return 0;
}

// stdin rows `x,t` -> stdout rows `x,t,w[,d]` for the named oracle
int oracle_cmd(const std::string& name) {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string xs, ts;
    if (!std::getline(ls, xs, ',') || !std::getline(ls, ts, ','))
      throw levelset::ConfigError("oracle: expected rows `x,t`");
    const double x = std::stod(xs), t = std::stod(ts);
    if (name == "two-bumps") {
      const auto v = levelset::oracles::example_two_bumps(x, t);
      std::cout << x << "," << t << "," << v.w << "," << v.d << "\n";
    } else if (name == "bounded-speed") {
      std::cout << x << "," << t << "," << levelset::oracles::example_bounded_speed_w(x, t)
                << "," << levelset::oracles::example_bounded_speed_d(x, t) << "\n";
    } else if (name == "hopf-lax-two-bumps") {
      const double w = levelset::oracles::hopf_lax_w(
          [](const levelset::Vec2& y) { return levelset::oracles::two_bumps_u0(y.x()); },
          levelset::Vec2(x, 0.0), t, 1);
      std::cout << x << "," << t << "," << w << "\n";
    } else {
      throw levelset::ConfigError("oracle: unknown oracle `" + name + "`");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"level-set evolution, reinitialization and homogenization toolkit"};
  app.require_subcommand(1);

  std::string config, out_dir, artifact_dir, oracle_name = "two-bumps";
  double h1_value = 1.0, h2_value = 0.0, theta = 1.0, v0 = 0.0;
  long samples = 101;

  auto* run = app.add_subcommand("run", "run an experiment from a JSON config");
  run->add_option("config", config, "config file")->required();
  run->add_option("-o,--out", out_dir, "artifact directory");

  auto* rep = app.add_subcommand("report", "print the convergence table of a run");
  rep->add_option("dir", artifact_dir, "artifact directory")->required();

  auto* cell = app.add_subcommand("cell", "solve the two-phase cell problem");
  cell->add_option("--h1", h1_value, "H1 phase value");
  cell->add_option("--h2", h2_value, "corrector phase value");
  cell->add_option("--theta", theta, "phase ratio k2/k1");
  cell->add_option("--v0", v0, "corrector value at tau=0");
  cell->add_option("--samples", samples, "rows in the v table");

  auto* oracle = app.add_subcommand("oracle", "evaluate an oracle at stdin CSV points");
  oracle->add_option("name", oracle_name,
                     "two-bumps | bounded-speed | hopf-lax-two-bumps");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_cmd(config, out_dir);
    if (rep->parsed()) return report_cmd(artifact_dir);
    if (cell->parsed()) return cell_cmd(h1_value, h2_value, theta, v0, samples);
    if (oracle->parsed()) return oracle_cmd(oracle_name);
  } catch (const levelset::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const levelset::UsageError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const levelset::NumericsError& e) {
    std::cerr << "numerical blowup: " << e.what() << " at t=" << e.time() << "\n";
    return kExitNumerics;
  } catch (const levelset::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}

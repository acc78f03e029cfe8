// cp3body: two-atom + plate Casimir-Polder energies from the command line.
//
//   cp3body energy --config atoms.json [--format text|json] [--out FILE]
//   cp3body sweep  --config sweep.json [--format csv|json] [--out FILE]
//   cp3body verify --config atoms.json [--tol X]
//   cp3body verify --random N --seed S [--tol X]
//   cp3body figure fig2 [fig3 ...|all] --out DIR
//
// Exit codes: 0 ok, 2 parse/usage, 3 verification or quadrature failure,
// 4 I/O, 5 invalid geometry.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "casimir/analytic.hpp"
#include "casimir/config.hpp"
#include "casimir/oracle.hpp"
#include "casimir/sweep.hpp"

namespace {

using namespace casimir;

enum ExitCode : int { kOk = 0, kParse = 2, kVerify = 3, kIo = 4, kGeometry = 5 };

struct Options {
  std::string config;
  std::string out;
  std::string format;
  double tol = 0.0;
  int random = 0;
  std::uint64_t seed = 42;
  std::vector<std::string> presets;
};

void warn(const std::string& msg) { std::cerr << "warning: " << msg << '\n'; }

void warn_if_not_psd(const RunConfig& cfg) {
  if (!cfg.alpha1.is_positive_semidefinite()) warn("atoms[0].alpha is not positive semidefinite");
  if (!cfg.alpha2.is_positive_semidefinite()) warn("atoms[1].alpha is not positive semidefinite");
}

/// Writes `text` to --out, or stdout when no path was given.
void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + opt.out);
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + opt.out);
}

std::string energy_text(const EnergyBreakdown& e) {
  auto line = [](const char* name, const std::optional<double>& v) {
    return fmt::format("{:<10}{}\n", name, v ? format_number(*v) : std::string("(atom on plate, excluded)"));
  };
  std::string s;
  s += line("e12", e.e12);
  s += line("e123", e.e123);
  s += line("e213", e.e213);
  s += line("e1323", e.e1323);
  s += line("delta_e3", e.delta_e3);
  s += line("e_cp1", e.e_cp1);
  s += line("e_cp2", e.e_cp2);
  s += line("e_pair", e.interaction());
  s += line("total", e.total());
  return s;
}

std::string energy_json(const EnergyBreakdown& e) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json j{{"e12", e.e12},          {"e123", e.e123},          {"e213", e.e213},
                   {"e1323", e.e1323},      {"delta_e3", e.delta_e3},  {"e_cp1", opt(e.e_cp1)},
                   {"e_cp2", opt(e.e_cp2)}, {"e_pair", e.interaction()}, {"total", e.total()}};
  return j.dump(2) + "\n";
}

int cmd_energy(const Options& opt) {
  const RunConfig cfg = load_config(opt.config);
  if (!cfg.system) throw ConfigError("atoms: both atoms need a position for the energy command");
  warn_if_not_psd(cfg);
  const EnergyBreakdown e = analytic_energies(*cfg.system);
  const std::string format = opt.format.empty() ? "text" : opt.format;
  if (format == "text")
    emit(opt, energy_text(e));
  else if (format == "json")
    emit(opt, energy_json(e));
  else
    throw ConfigError("--format: energy supports text or json");
  return kOk;
}

int cmd_sweep(const Options& opt) {
  const RunConfig cfg = load_config(opt.config);
  if (!cfg.sweep) throw ConfigError("sweep: missing sweep section");
  warn_if_not_psd(cfg);
  const auto rows = run_sweep(*cfg.sweep, cfg.alpha1, cfg.alpha2, warn);
  std::ostringstream out;
  const std::string format = opt.format.empty() ? "csv" : opt.format;
  if (format == "csv")
    write_csv(out, rows);
  else if (format == "json")
    write_json(out, rows);
  else
    throw ConfigError("--format: sweep supports csv or json");
  emit(opt, out.str());
  return kOk;
}

void print_report(const std::string& prefix, const VerificationReport& report) {
  for (const TermCheck& c : report.checks) {
    if (c.skipped) {
      std::cout << fmt::format("{}SKIP {:<6} atom on plate\n", prefix, term_name(c.term));
      continue;
    }
    std::cout << fmt::format("{}{} {:<6} analytic={:<24} numeric={:<24} rel_diff={:.3e}\n", prefix,
                             c.passed ? "PASS" : "FAIL", term_name(c.term), format_number(c.analytic),
                             format_number(c.numeric.value), c.rel_diff);
  }
}

int cmd_verify(const Options& opt) {
  VerifySettings settings;
  std::vector<SystemConfig> configs;
  if (opt.random > 0) {
    if (!opt.config.empty()) throw ConfigError("--random and --config are mutually exclusive");
    std::mt19937_64 rng(opt.seed);
    for (int k = 0; k < opt.random; ++k) configs.push_back(random_config(rng));
  } else {
    if (opt.config.empty()) throw ConfigError("verify needs --config or --random");
    const RunConfig cfg = load_config(opt.config);
    if (!cfg.system) throw ConfigError("atoms: both atoms need a position for the verify command");
    warn_if_not_psd(cfg);
    if (cfg.tolerance) settings.tolerance = *cfg.tolerance;
    configs.push_back(*cfg.system);
  }
  if (opt.tol > 0.0) settings.tolerance = opt.tol;

  int failures = 0;
  int checks = 0;
  for (std::size_t k = 0; k < configs.size(); ++k) {
    const auto report = verify(configs[k], settings);
    print_report(configs.size() > 1 ? fmt::format("config {:>3}: ", k) : std::string(), report);
    for (const TermCheck& c : report.checks) {
      if (c.skipped) continue;
      ++checks;
      if (!c.passed) ++failures;
    }
  }
  std::cout << fmt::format("verify: {} checks, {} failed (tol {})\n", checks, failures,
                           format_number(settings.tolerance));
  return failures == 0 ? kOk : kVerify;
}

int cmd_figure(const Options& opt) {
  if (opt.out.empty()) throw ConfigError("--out: figure needs an output directory");
  std::vector<std::string> ids = opt.presets;
  if (ids.size() == 1 && ids[0] == "all") ids = {"fig2", "fig3", "fig4", "fig5"};
  std::vector<FigurePreset> presets;
  for (const auto& id : ids) presets.push_back(figure_preset(id));
  for (const auto& p : presets) std::cout << write_figure(p, opt.out, warn).string() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir-Polder energies of two polarizable atoms near a perfectly conducting plate"};
  app.require_subcommand(1);
  Options opt;

  auto* energy = app.add_subcommand("energy", "closed-form energy breakdown for one configuration");
  energy->add_option("--config", opt.config, "JSON configuration")->required();
  energy->add_option("--out", opt.out, "output file (default stdout)");
  energy->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* sweep = app.add_subcommand("sweep", "energies along a sweep axis");
  sweep->add_option("--config", opt.config, "JSON configuration with a sweep section")->required();
  sweep->add_option("--out", opt.out, "output file (default stdout)");
  sweep->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "compare closed forms against frequency quadrature");
  verify_cmd->add_option("--config", opt.config, "JSON configuration");
  verify_cmd->add_option("--random", opt.random, "number of random configurations")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", opt.seed, "seed for --random");
  verify_cmd->add_option("--tol", opt.tol, "relative tolerance (default 1e-8)")->check(CLI::PositiveNumber);

  auto* figure = app.add_subcommand("figure", "write the preset figure datasets as CSV");
  figure->add_option("presets", opt.presets, "fig2, fig3, fig4, fig5 or all")->required();
  figure->add_option("--out", opt.out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*energy) return cmd_energy(opt);
    if (*sweep) return cmd_sweep(opt);
    if (*verify_cmd) return cmd_verify(opt);
    if (*figure) return cmd_figure(opt);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const QuadratureError& e) {
    std::cerr << "error: quadrature failure in term " << term_name(e.term()) << ": " << e.what() << '\n';
    return kVerify;
  } catch (const GeometryError& e) {
    std::cerr << "error: invalid geometry: " << e.what() << '\n';
    return kGeometry;
  }
  return kParse;
}

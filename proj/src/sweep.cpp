#include "casimir/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace casimir {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double canonical(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * canonical(rng); }

PolarizabilityTensor random_tensor(std::mt19937_64& rng) {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = uniform(rng, -1.0, 1.0);
  return PolarizabilityTensor((m + m.transposed()) * 0.5);
}

}  // namespace

SweepRow SweepRow::from_energies(double param, const EnergyBreakdown& e) {
  SweepRow row;
  row.param = param;
  row.e12 = e.e12;
  row.e123 = e.e123;
  row.e213 = e.e213;
  row.e1323 = e.e1323;
  row.delta_e3 = e.delta_e3;
  row.g3 = (e.e123 + e.e213) / e.e12;
  row.g4 = e.e1323 / e.e12;
  row.g = e.delta_e3 / e.e12;
  return row;
}

SweepRow SweepRow::degenerate(double param) {
  return {param, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
}

SystemConfig sweep_point(const SweepAxis& axis, double value, const PolarizabilityTensor& alpha1,
                         const PolarizabilityTensor& alpha2) {
  switch (axis.parameter) {
    case SweepParameter::ZOverA:
      return make_equidistant_config(axis.a, value * axis.a, alpha1, alpha2);
    case SweepParameter::GammaEq: {
      if (!(value >= 1.0)) throw GeometryError("gamma must be >= 1");
      return make_equidistant_config(axis.a, 0.5 * axis.a * std::sqrt(value * value - 1.0), alpha1, alpha2);
    }
    case SweepParameter::Gamma:
      return make_unequal_config(axis.a_over_r * axis.r, axis.r, value, alpha1, alpha2);
    case SweepParameter::A:
      return make_equidistant_config(value, axis.Z, alpha1, alpha2);
  }
  throw GeometryError("unknown sweep parameter");
}

std::vector<SweepRow> run_sweep(const SweepAxis& axis, const PolarizabilityTensor& alpha1,
                                const PolarizabilityTensor& alpha2, const WarningSink& warn) {
  validate_sweep(axis);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(axis.steps));
  for (int k = 0; k < axis.steps; ++k) {
    const double value = axis.value_at(k);
    try {
      rows.push_back(SweepRow::from_energies(value, analytic_energies(sweep_point(axis, value, alpha1, alpha2))));
    } catch (const GeometryError& e) {
      if (warn) warn(fmt::format("{}={}: degenerate point ({}), row set to NaN", parameter_name(axis.parameter),
                                 format_number(value), e.what()));
      rows.push_back(SweepRow::degenerate(value));
    }
  }
  return rows;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  return fmt::format("{}", v);
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << format_number(r.param) << ',' << format_number(r.e12) << ',' << format_number(r.e123) << ','
        << format_number(r.e213) << ',' << format_number(r.e1323) << ',' << format_number(r.delta_e3) << ','
        << format_number(r.g) << ',' << format_number(r.g3) << ',' << format_number(r.g4) << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  auto num = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    arr.push_back({{"param", num(r.param)},
                   {"e12", num(r.e12)},
                   {"e123", num(r.e123)},
                   {"e213", num(r.e213)},
                   {"e1323", num(r.e1323)},
                   {"delta_e3", num(r.delta_e3)},
                   {"g", num(r.g)},
                   {"g3", num(r.g3)},
                   {"g4", num(r.g4)}});
  }
  out << arr.dump(2) << '\n';
}

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) throw ConfigError("csv: unexpected header");
  std::vector<SweepRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    double v[9];
    std::istringstream fields(line);
    std::string cell;
    for (int k = 0; k < 9; ++k) {
      if (!std::getline(fields, cell, ',')) throw ConfigError(fmt::format("csv line {}: expected 9 fields", lineno));
      char* end = nullptr;
      v[k] = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0')
        throw ConfigError(fmt::format("csv line {}: bad number '{}'", lineno, cell));
    }
    rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]});
  }
  return rows;
}

FigurePreset figure_preset(std::string_view id) {
  const auto iso = PolarizabilityTensor::isotropic(1.0);
  const auto zonly = PolarizabilityTensor::uniaxial(0.0, 1.0);
  const auto perp = PolarizabilityTensor::uniaxial(1.0, 0.0);
  SweepAxis axis;
  axis.steps = 201;
  if (id == "fig2" || id == "fig3") {
    axis.parameter = SweepParameter::ZOverA;
    axis.min = 0.0;
    axis.max = 2.0;
    axis.a = 1.0;
    const auto& alpha = id == "fig2" ? iso : zonly;
    return {std::string(id), axis, alpha, alpha};
  }
  if (id == "fig4" || id == "fig5") {
    axis.parameter = SweepParameter::Gamma;
    axis.min = 1.0;
    axis.max = 4.0;
    axis.r = 1.0;
    axis.a_over_r = id == "fig4" ? 0.75 : 0.5;
    const auto& alpha = id == "fig4" ? zonly : perp;
    return {std::string(id), axis, alpha, alpha};
  }
  throw ConfigError("unknown figure preset '" + std::string(id) + "' (expected fig2, fig3, fig4 or fig5)");
}

std::filesystem::path write_figure(const FigurePreset& preset, const std::filesystem::path& dir,
                                   const WarningSink& warn) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = dir / (preset.id + ".csv");
  const auto rows = run_sweep(preset.axis, preset.alpha1, preset.alpha2, warn);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write_csv(out, rows);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
  return path;
}

SystemConfig random_config(std::mt19937_64& rng) {
  const double z1 = uniform(rng, 0.2, 5.0);
  const double z2 = uniform(rng, 0.2, 5.0);
  const double a = uniform(rng, 0.2, 5.0);
  const double phi = uniform(rng, 0.0, 2.0 * kPi);
  const auto alpha1 = random_tensor(rng);
  const auto alpha2 = random_tensor(rng);
  return {AtomSpec{{0.0, 0.0, z1}, alpha1, false},
          AtomSpec{{a * std::cos(phi), a * std::sin(phi), z2}, alpha2, false}};
}

}  // namespace casimir

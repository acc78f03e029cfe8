#pragma once

// Parameter sweeps over the symmetric geometries and their CSV/JSON output.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/analytic.hpp"
#include "casimir/config.hpp"

namespace casimir {

inline constexpr std::string_view kSweepCsvHeader = "param,e12,e123,e213,e1323,delta_e3,g,g3,g4";

struct SweepRow {
  double param = 0.0;
  double e12 = 0.0;
  double e123 = 0.0;
  double e213 = 0.0;
  double e1323 = 0.0;
  double delta_e3 = 0.0;
  double g = 0.0;   ///< delta_e3 / e12
  double g3 = 0.0;  ///< (e123 + e213) / e12
  double g4 = 0.0;  ///< e1323 / e12

  static SweepRow from_energies(double param, const EnergyBreakdown& e);
  /// All energy columns NaN; used for singular points.
  static SweepRow degenerate(double param);
};

/// Receives one message per degenerate sweep point.
using WarningSink = std::function<void(const std::string&)>;

/// The configuration a sweep places at `value`. Throws GeometryError.
SystemConfig sweep_point(const SweepAxis& axis, double value, const PolarizabilityTensor& alpha1,
                         const PolarizabilityTensor& alpha2);

/// One row per step, in axis order. Points whose geometry is singular produce
/// NaN rows and a warning instead of aborting.
std::vector<SweepRow> run_sweep(const SweepAxis& axis, const PolarizabilityTensor& alpha1,
                                const PolarizabilityTensor& alpha2, const WarningSink& warn = {});

/// Shortest decimal representation that parses back to the same double.
std::string format_number(double v);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_json(std::ostream& out, const std::vector<SweepRow>& rows);
/// Inverse of write_csv. Throws ConfigError on a header or field mismatch.
std::vector<SweepRow> read_csv(std::istream& in);

struct FigurePreset {
  std::string id;
  SweepAxis axis;
  PolarizabilityTensor alpha1;
  PolarizabilityTensor alpha2;
};

/// fig2: isotropic, equal heights, Z/a in [0, 2].
/// fig3: z-only, equal heights, Z/a in [0, 2].
/// fig4: z-only, Gamma in [1, 4] at a/r = 0.75, r = 1.
/// fig5: transverse-only, Gamma in [1, 4] at a/r = 0.5, r = 1.
/// All use 201 points and unit polarizabilities, so energies come out in
/// units of alpha1 alpha2 / r^7 (or / a^7). Throws ConfigError for other ids.
FigurePreset figure_preset(std::string_view id);

/// Writes `<dir>/<id>.csv` and returns its path. Throws IoError.
std::filesystem::path write_figure(const FigurePreset& preset, const std::filesystem::path& dir,
                                   const WarningSink& warn = {});

/// Random configuration for oracle batches: heights and horizontal separation
/// uniform in [0.2, 5], random horizontal direction, symmetric tensors with
/// entries in [-1, 1]. Deterministic for a given engine state.
SystemConfig random_config(std::mt19937_64& rng);

}  // namespace casimir

#pragma once

// JSON run configuration for the command-line tool.
//
//   {
//     "atoms": [
//       {"position": [0, 0, 1], "alpha": [[1,0,0],[0,1,0],[0,0,1]]},
//       {"position": [1, 0, 1], "alpha_perp": 0.0, "alpha_z": 1.0, "contact": false}
//     ],
//     "sweep": {"parameter": "Z_over_a", "min": 0, "max": 2, "steps": 201, "a": 1},
//     "tol": 1e-8
//   }
//
// "alpha" may also be a single number (isotropic). Positions are required
// except in sweep configs, where the sweep places the atoms.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "casimir/error.hpp"
#include "casimir/geometry.hpp"

namespace casimir {

/// Unparseable input or a missing/ill-typed field. what() names the field,
/// or the line and column for malformed JSON.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

enum class SweepParameter {
  ZOverA,  ///< equal heights, Z = value * a
  Gamma,   ///< unequal heights at fixed r and a/r, value = R / r
  GammaEq, ///< equal heights parameterised by gamma = sqrt(1 + 4 Z^2 / a^2)
  A,       ///< horizontal separation at a fixed common height Z
};

std::string_view parameter_name(SweepParameter p);

struct SweepAxis {
  SweepParameter parameter = SweepParameter::ZOverA;
  double min = 0.0;
  double max = 1.0;
  int steps = 2;
  double a = 1.0;         ///< horizontal separation for the equal-height families
  double r = 1.0;         ///< atom-atom distance for the Gamma family
  double a_over_r = 0.75; ///< for the Gamma family
  double Z = 1.0;         ///< common height for the separation family

  double value_at(int step) const;
};

struct RunConfig {
  PolarizabilityTensor alpha1 = PolarizabilityTensor::isotropic(1.0);
  PolarizabilityTensor alpha2 = PolarizabilityTensor::isotropic(1.0);
  std::optional<SystemConfig> system;  ///< present when both positions are given
  std::optional<SweepAxis> sweep;
  std::optional<double> tolerance;
};

RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);

/// Throws ConfigError if the sweep violates its range rules (steps >= 2,
/// Gamma >= 1, gamma >= 1, Z/a >= 0, 0 < a/r <= 1, separation >= 0).
void validate_sweep(const SweepAxis& axis);

}  // namespace casimir

#pragma once

// Numerical route to every energy term: integrate the dyadic trace of the
// single-scattering expansion over imaginary frequency. Shares nothing with
// the closed forms beyond the geometry, so agreement between the two is a
// real check of both.

#include <array>
#include <functional>
#include <string_view>
#include <vector>

#include "casimir/analytic.hpp"
#include "casimir/error.hpp"
#include "casimir/geometry.hpp"
#include "casimir/propagators.hpp"

namespace casimir {

enum class Term { E12, E123, E213, E1323, ECP1, ECP2 };

inline constexpr std::array<Term, 6> kAllTerms{Term::E12, Term::E123, Term::E213,
                                               Term::E1323, Term::ECP1, Term::ECP2};

std::string_view term_name(Term term);

struct QuadratureSettings {
  double rel_tol = 1e-10;
  /// Absolute floor, as a multiple of the integral of |integrand|.
  double abs_floor = 1e-16;
  int max_subdivisions = 200;
};

struct OracleResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  /// Integral of |integrand|; the magnitude scale for cancellation checks.
  double l1_norm = 0.0;
};

class QuadratureError : public Error {
 public:
  QuadratureError(Term term, const OracleResult& partial, const std::string& what)
      : Error(what), term_(term), partial_(partial) {}
  Term term() const { return term_; }
  const OracleResult& partial() const { return partial_; }

 private:
  Term term_;
  OracleResult partial_;
};

/// Overall sign of  Tr V G V G  relative to the energy, fixed once against the
/// isotropic two-atom benchmark and shared by every term.
inline constexpr double kScatteringSign = -1.0;

/// Energy density on the half line: the term's energy is the integral of this
/// over zeta in [0, inf). The even extension to zeta < 0 is already folded in.
/// Delta-function atomic potentials 4 pi alpha are collapsed onto the atom
/// positions, so the operator trace becomes a 3x3 trace.
/// Throws GeometryError for an invalid configuration, or for ECP of an atom
/// on the plate.
double integrand(Term term, const SystemConfig& cfg, ImaginaryFrequency zeta);

/// Adaptive Gauss-Kronrod (7/15) integration of integrand() with global
/// bisection of the worst interval. Throws QuadratureError, carrying the
/// partial estimate, if the tolerance is not met within max_subdivisions.
OracleResult numeric_energy(Term term, const SystemConfig& cfg, const QuadratureSettings& settings = {});

/// Closed-form value for the same term.
double analytic_term(Term term, const EnergyBreakdown& e);

struct TermCheck {
  Term term = Term::E12;
  double analytic = 0.0;
  OracleResult numeric;
  double rel_diff = 0.0;
  bool passed = false;
  bool skipped = false;  ///< atom-wall term of an atom on the plate
};

struct VerificationReport {
  std::vector<TermCheck> checks;
  double tolerance = 0.0;
  bool passed() const;
};

struct VerifySettings {
  double tolerance = 1e-8;
  /// A term smaller than this fraction of its integral of |integrand| is
  /// compared against that scale instead of its own magnitude.
  double cancellation_floor = 1e-6;
  QuadratureSettings quadrature;
};

using AnalyticModel = std::function<EnergyBreakdown(const SystemConfig&)>;

/// |numeric - analytic| / max(|analytic|, cancellation_floor * l1_norm).
double relative_difference(double analytic, const OracleResult& numeric, double cancellation_floor);

/// Evaluates all six terms both ways. Quadrature failures propagate as QuadratureError.
VerificationReport verify(const SystemConfig& cfg, const VerifySettings& settings = {},
                          const AnalyticModel& model = analytic_energies);

}  // namespace casimir

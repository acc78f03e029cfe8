#pragma once

// Imaginary-frequency electromagnetic dyadics: the vacuum propagator and the
// image part contributed by a perfectly conducting plate at z = 0.

#include "casimir/linalg.hpp"

namespace casimir {

/// Imaginary frequency zeta >= 0 (units 1/L). Integrands depend on |zeta| only.
class ImaginaryFrequency {
 public:
  /// Throws std::invalid_argument for negative or non-finite values.
  explicit ImaginaryFrequency(double zeta);
  /// Folds a signed frequency onto the half line.
  static ImaginaryFrequency folded(double zeta);
  double value() const { return zeta_; }

 private:
  double zeta_;
};

struct PropagatorPolynomials {
  double u;
  double v;
};

/// u(x) = 1 + x + x^2, v(x) = 3 + 3x + x^2.
constexpr PropagatorPolynomials propagator_polynomials(double x) {
  return {1.0 + x * (1.0 + x), 3.0 + x * (3.0 + x)};
}

/// Free dyadic  -exp(-zeta R) / (4 pi R^3) [ 1 u(zeta R) - Rhat Rhat v(zeta R) ].
/// Throws GeometryError for a zero separation.
Matrix3 gamma0(const Vector3& separation, ImaginaryFrequency zeta);

/// Image dyadic  gamma0(r - image(r')) (1 - 2 zhat zhat), the negative of the
/// plate's scattered Green dyadic. Throws GeometryError when r == image(r').
Matrix3 gamma_bar(const Vector3& r, const Vector3& r_prime, ImaginaryFrequency zeta);

}  // namespace casimir

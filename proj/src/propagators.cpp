#include "casimir/propagators.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/error.hpp"
#include "casimir/geometry.hpp"

namespace casimir {

ImaginaryFrequency::ImaginaryFrequency(double zeta) : zeta_(zeta) {
  if (!(zeta >= 0.0) || !std::isfinite(zeta))
    throw std::invalid_argument("imaginary frequency must be finite and nonnegative");
}

ImaginaryFrequency ImaginaryFrequency::folded(double zeta) { return ImaginaryFrequency(std::fabs(zeta)); }

Matrix3 gamma0(const Vector3& separation, ImaginaryFrequency zeta) {
  const double R = norm(separation);
  if (!(R > 0.0)) throw GeometryError("free propagator evaluated at zero separation");
  const Vector3 n = separation * (1.0 / R);
  const double x = zeta.value() * R;
  const auto [u, v] = propagator_polynomials(x);
  const double prefactor = -std::exp(-x) / (4.0 * kPi * R * R * R);
  return prefactor * (Matrix3::identity() * u - Matrix3::outer(n, n) * v);
}

Matrix3 gamma_bar(const Vector3& r, const Vector3& r_prime, ImaginaryFrequency zeta) {
  const Vector3 separation = r - image_point(r_prime);
  if (!(norm(separation) > 0.0)) throw GeometryError("point coincides with the image of the source");
  Matrix3 g = gamma0(separation, zeta);
  // right-multiply by diag(1, 1, -1): negate the z column
  for (std::size_t i = 0; i < 3; ++i) g(i, 2) = -g(i, 2);
  return g;
}

}  // namespace casimir

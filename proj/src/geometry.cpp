#include "casimir/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace casimir {

PolarizabilityTensor::PolarizabilityTensor(const Matrix3& m) : m_(m) {
  if (!m.is_finite()) throw ValidationError("polarizability tensor has non-finite entries");
  const double scale = m.max_abs();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (std::fabs(m(i, j) - m(j, i)) > kSymmetryTolerance * scale)
        throw ValidationError("polarizability tensor is not symmetric (entry " + std::to_string(i) + "," +
                              std::to_string(j) + ")");
}

PolarizabilityTensor PolarizabilityTensor::isotropic(double alpha) {
  return PolarizabilityTensor(Matrix3::diagonal(alpha, alpha, alpha));
}

PolarizabilityTensor PolarizabilityTensor::uniaxial(double alpha_perp, double alpha_z) {
  return PolarizabilityTensor(Matrix3::diagonal(alpha_perp, alpha_perp, alpha_z));
}

bool PolarizabilityTensor::is_positive_semidefinite() const {
  const double scale = m_.max_abs();
  if (scale == 0.0) return true;
  // Sylvester on all principal minors of the normalised matrix.
  const Matrix3 m = m_ * (1.0 / scale);
  constexpr double eps = 1e-12;
  for (std::size_t i = 0; i < 3; ++i)
    if (m(i, i) < -eps) return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (m(i, i) * m(j, j) - m(i, j) * m(j, i) < -eps) return false;
  return m.determinant() >= -eps;
}

ReflectedTensor reflect_tensor(const PolarizabilityTensor& alpha) {
  Matrix3 b = alpha.matrix();
  for (std::size_t j = 0; j < 3; ++j) b(2, j) = -b(2, j);
  return ReflectedTensor(b);
}

void validate_atom(const AtomSpec& atom, const char* name) {
  if (!atom.position.is_finite()) throw GeometryError(std::string(name) + ": position is not finite");
  if (atom.position.z < 0.0) throw GeometryError(std::string(name) + ": below the plate (z < 0)");
  if (atom.position.z == 0.0 && !atom.contact)
    throw GeometryError(std::string(name) + ": on the plate (z = 0) without the contact flag");
}

GeometryDerived derive_geometry(const SystemConfig& cfg) {
  validate_atom(cfg.atom1, "atom1");
  validate_atom(cfg.atom2, "atom2");

  const Vector3& p1 = cfg.atom1.position;
  const Vector3& p2 = cfg.atom2.position;

  GeometryDerived g;
  g.r12 = p1 - p2;
  g.r21 = p2 - p1;
  g.r2_image1 = p2 - image_point(p1);
  g.r1_image2 = p1 - image_point(p2);
  g.a = std::hypot(g.r12.x, g.r12.y);
  g.delta_z = p1.z - p2.z;
  g.r = norm(g.r12);
  if (!(g.r > 0.0)) throw GeometryError("atoms are coincident");
  g.R = norm(g.r2_image1);
  g.Gamma = g.R / g.r;

  const double scale = std::max({p1.z, p2.z, g.a});
  if (std::fabs(g.delta_z) <= 1e-12 * scale) g.gamma = g.Gamma;
  return g;
}

SystemConfig make_equidistant_config(double a, double Z, const PolarizabilityTensor& alpha1,
                                     const PolarizabilityTensor& alpha2) {
  const bool contact = Z == 0.0;
  return {AtomSpec{{0.0, 0.0, Z}, alpha1, contact}, AtomSpec{{a, 0.0, Z}, alpha2, contact}};
}

SystemConfig make_unequal_config(double a, double r, double Gamma, const PolarizabilityTensor& alpha1,
                                 const PolarizabilityTensor& alpha2) {
  if (!(r > 0.0) || !(a >= 0.0) || a > r) throw GeometryError("unequal-height config needs 0 <= a <= r, r > 0");
  if (!(Gamma >= 1.0)) throw GeometryError("unequal-height config needs Gamma >= 1");
  // Z1 - Z2 = sqrt(r^2 - a^2), Z1 + Z2 = sqrt(R^2 - a^2).
  const double diff = std::sqrt(std::max(0.0, r * r - a * a));
  const double sum = std::sqrt(std::max(0.0, Gamma * Gamma * r * r - a * a));
  const double z1 = 0.5 * (sum + diff);
  const double z2 = Gamma == 1.0 ? 0.0 : std::max(0.0, 0.5 * (sum - diff));
  return {AtomSpec{{0.0, 0.0, z1}, alpha1, z1 == 0.0}, AtomSpec{{a, 0.0, z2}, alpha2, z2 == 0.0}};
}

double equidistant_gamma(double a, double Z) {
  if (!(a > 0.0) || !(Z >= 0.0)) throw GeometryError("equidistant gamma needs a > 0, Z >= 0");
  const double t = 2.0 * Z / a;
  return std::sqrt(1.0 + t * t);
}

}  // namespace casimir

#pragma once

// Atom/plate configurations, mirror images and the derived distances.
//
// The conducting plate is the plane z = 0 with normal +z. Atoms live in
// z >= 0; z == 0 is only accepted for atoms that carry the contact flag.

#include <optional>

#include "casimir/error.hpp"
#include "casimir/linalg.hpp"

namespace casimir {

/// Relative tolerance used for the symmetry check on polarizabilities.
inline constexpr double kSymmetryTolerance = 1e-12;

/// Static electric polarizability, a symmetric 3x3 tensor with units L^3.
class PolarizabilityTensor {
 public:
  /// Throws ValidationError if `m` is not finite or not symmetric to
  /// kSymmetryTolerance relative to its largest entry.
  explicit PolarizabilityTensor(const Matrix3& m);

  static PolarizabilityTensor isotropic(double alpha);
  /// diag(perp, perp, z).
  static PolarizabilityTensor uniaxial(double alpha_perp, double alpha_z);

  const Matrix3& matrix() const { return m_; }
  double trace() const { return m_.trace(); }
  /// True when every principal minor is nonnegative (to roundoff). Not enforced anywhere.
  bool is_positive_semidefinite() const;

 private:
  Matrix3 m_;
};

/// diag(1,1,-1) * alpha. Only obtainable through reflect_tensor().
class ReflectedTensor {
 public:
  const Matrix3& matrix() const { return m_; }

 private:
  explicit ReflectedTensor(const Matrix3& m) : m_(m) {}
  friend ReflectedTensor reflect_tensor(const PolarizabilityTensor& alpha);
  Matrix3 m_;
};

struct AtomSpec {
  Vector3 position;
  PolarizabilityTensor alpha;
  /// Permits position.z == 0 (the analytically finite "touching" limit).
  bool contact = false;
};

struct SystemConfig {
  AtomSpec atom1;
  AtomSpec atom2;
};

struct GeometryDerived {
  double a = 0.0;         ///< horizontal separation
  double delta_z = 0.0;   ///< Z1 - Z2
  double r = 0.0;         ///< |r1 - r2|
  double R = 0.0;         ///< |r2 - image(r1)| (= |r1 - image(r2)|)
  double Gamma = 1.0;     ///< R / r
  std::optional<double> gamma;  ///< R / r for equal heights, absent otherwise
  Vector3 r12;            ///< r1 - r2
  Vector3 r21;            ///< r2 - r1
  Vector3 r2_image1;      ///< r2 - image(r1)
  Vector3 r1_image2;      ///< r1 - image(r2)
};

/// Mirror image through the plate: (x, y, -z).
constexpr Vector3 image_point(const Vector3& p) { return {p.x, p.y, -p.z}; }

ReflectedTensor reflect_tensor(const PolarizabilityTensor& alpha);

/// Checks the height/contact rules for one atom. Throws GeometryError.
void validate_atom(const AtomSpec& atom, const char* name);

/// Throws GeometryError for coincident atoms, negative heights, or a zero
/// height on an atom without the contact flag.
GeometryDerived derive_geometry(const SystemConfig& cfg);

/// Two atoms at common height Z, separated by `a` along x.
/// Z == 0 sets the contact flag on both atoms.
SystemConfig make_equidistant_config(double a, double Z, const PolarizabilityTensor& alpha1,
                                     const PolarizabilityTensor& alpha2);

/// Unequal heights parameterised by the atom-atom distance r, the horizontal
/// separation a (0 <= a <= r) and Gamma = R / r >= 1. Atom 1 is the higher one;
/// Gamma == 1 places atom 2 on the plate with the contact flag set.
SystemConfig make_unequal_config(double a, double r, double Gamma, const PolarizabilityTensor& alpha1,
                                 const PolarizabilityTensor& alpha2);

/// gamma = sqrt(1 + 4 Z^2 / a^2).
double equidistant_gamma(double a, double Z);

}  // namespace casimir

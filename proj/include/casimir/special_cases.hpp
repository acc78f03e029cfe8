#pragma once

// Closed forms for the symmetric geometries. These are written out directly
// from their polynomial expressions and never call f_kernel, so comparing
// them against three_body_terms() checks both.

namespace casimir {

/// Isotropic atoms at equal heights: delta_e3 = g_iso(gamma) * e12 with
///   g_iso(gamma) = -64 (1 + 4 gamma) / (23 gamma^3 (1 + gamma)^4) + gamma^-7.
/// Throws GeometryError for gamma < 1.
double g_iso(double gamma);

/// Three-scattering part of g_iso (both orderings), always negative.
double g_iso_three(double gamma);
/// Four-scattering part of g_iso, gamma^-7.
double g_iso_four(double gamma);

struct EquidistantTerms {
  double e123_single = 0.0;  ///< e123 == e213 for this geometry
  double e1323 = 0.0;
};

/// Uniaxial atoms diag(perp, perp, z) at common height Z, horizontal separation a.
/// Z == 0 is the contact limit. Throws GeometryError for a <= 0 or Z < 0.
EquidistantTerms equidistant_aniso(double alpha_perp1, double alpha_z1, double alpha_perp2, double alpha_z2,
                                   double a, double Z);

/// Atoms polarizable only along z at equal heights, normalised to
/// e12 = -13 alpha_z1 alpha_z2 / (8 pi a^7):  g3 = 2 e123 / e12, g4 = e1323 / e12.
double g3_zonly(double gamma);
double g4_zonly(double gamma);

struct UnequalTerms {
  double e12 = 0.0;
  double e123_single = 0.0;  ///< e123 == e213 for this geometry
  double e1323 = 0.0;

  double delta_e3() const { return 2.0 * e123_single + e1323; }
  double total() const { return e12 + delta_e3(); }
};

/// z-only atoms at unequal heights: horizontal separation a, distance r,
/// Gamma = R / r. Throws GeometryError unless 0 < a <= r and Gamma >= 1.
UnequalTerms zonly_unequal(double alpha_z1, double alpha_z2, double a, double r, double Gamma);

/// Transverse-only atoms diag(perp, perp, 0) at unequal heights.
UnequalTerms perp_unequal(double alpha_perp1, double alpha_perp2, double a, double r, double Gamma);

/// e12 / e_cp for an isotropic atom 2 near the plate:
///   (alpha2 / r^3) (46 / 3) (Z / r)^4.
double ratio_e12_over_ecp(double alpha2, double r, double Z);

}  // namespace casimir

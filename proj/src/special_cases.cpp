#include "casimir/special_cases.hpp"

#include <cmath>
#include <initializer_list>

#include "casimir/error.hpp"
#include "casimir/linalg.hpp"

namespace casimir {
namespace {

/// c0 + c1 t + c2 t^2 + ...
double poly(std::initializer_list<double> c, double t) {
  double acc = 0.0;
  for (auto it = std::rbegin(c); it != std::rend(c); ++it) acc = acc * t + *it;
  return acc;
}

void require_gamma(double gamma) {
  if (!(gamma >= 1.0)) throw GeometryError("gamma must be >= 1");
}

void require_unequal(double a, double r, double Gamma) {
  if (!(a > 0.0) || !(r > 0.0) || a > r) throw GeometryError("need 0 < a <= r");
  if (!(Gamma >= 1.0)) throw GeometryError("Gamma must be >= 1");
}

}  // namespace

double g_iso_three(double gamma) {
  require_gamma(gamma);
  const double p = 1.0 + gamma;
  return -64.0 * (1.0 + 4.0 * gamma) / (23.0 * gamma * gamma * gamma * p * p * p * p);
}

double g_iso_four(double gamma) {
  require_gamma(gamma);
  return std::pow(gamma, -7);
}

double g_iso(double gamma) { return g_iso_three(gamma) + g_iso_four(gamma); }

EquidistantTerms equidistant_aniso(double alpha_perp1, double alpha_z1, double alpha_perp2, double alpha_z2,
                                   double a, double Z) {
  if (!(a > 0.0) || !(Z >= 0.0)) throw GeometryError("equidistant formulas need a > 0, Z >= 0");
  const double t = 2.0 * Z / a;
  const double g = std::sqrt(1.0 + t * t);
  const double a7 = std::pow(a, 7);
  const double zz = alpha_z1 * alpha_z2;
  const double pp = alpha_perp1 * alpha_perp2;
  const double mixed = alpha_perp1 * alpha_z2 + alpha_z1 * alpha_perp2;

  EquidistantTerms out;
  out.e123_single = 2.0 / (kPi * a7 * std::pow(g, 5) * std::pow(1.0 + g, 5)) *
                    (zz * poly({-3, -15, -24, 0, 10, 5, 1}, g) + pp * poly({3, 15, 28, 20, 6, -5, -1}, g));
  const double g2 = g * g;
  out.e1323 = -1.0 / (8.0 * kPi * a7 * std::pow(g, 11)) *
              (zz * poly({63, -70, 20}, g2) + pp * poly({63, -56, 26}, g2) + mixed * 63.0 * (g2 - 1.0));
  return out;
}

double g3_zonly(double gamma) {
  require_gamma(gamma);
  // 2 e123 / e12 with e12 = -13 / (8 pi a^7); the a^7 and pi cancel.
  const double e123 = 2.0 / (std::pow(gamma, 5) * std::pow(1.0 + gamma, 5)) * poly({-3, -15, -24, 0, 10, 5, 1}, gamma);
  return -2.0 * e123 * 8.0 / 13.0;
}

double g4_zonly(double gamma) {
  require_gamma(gamma);
  const double g2 = gamma * gamma;
  return poly({63, -70, 20}, g2) / (13.0 * std::pow(gamma, 11));
}

UnequalTerms zonly_unequal(double alpha_z1, double alpha_z2, double a, double r, double Gamma) {
  require_unequal(a, r, Gamma);
  const double s = (a / r) * (a / r);  // a^2 / r^2
  const double S = s / (Gamma * Gamma);
  const double G = Gamma;
  const double p = 1.0 + G;
  const double pref = alpha_z1 * alpha_z2 / std::pow(r, 7);

  UnequalTerms out;
  out.e12 = -pref / (8.0 * kPi) * poly({20, -70, 63}, s);
  out.e123_single = -2.0 * pref / (kPi * std::pow(G, 5) * std::pow(p, 5)) *
                    (2.0 * G * G * p * p * poly({1, 3, 1}, G) - s * p * p * poly({3, 9, 11, 9, 3}, G) +
                     6.0 * s * s * poly({1, 5, 9, 5, 1}, G));
  out.e1323 = -pref / (8.0 * kPi * std::pow(G, 7)) * poly({20, -70, 63}, S);
  return out;
}

UnequalTerms perp_unequal(double alpha_perp1, double alpha_perp2, double a, double r, double Gamma) {
  require_unequal(a, r, Gamma);
  const double s = (a / r) * (a / r);
  const double S = s / (Gamma * Gamma);
  const double G = Gamma;
  const double pref = alpha_perp1 * alpha_perp2 / std::pow(r, 7);

  UnequalTerms out;
  out.e12 = -pref / (8.0 * kPi) * poly({26, -56, 63}, s);
  out.e123_single = 2.0 * pref / (kPi * std::pow(G, 5) * std::pow(1.0 + G, 5)) *
                    (2.0 * G * G * poly({1, 5, 14, 5, 1}, G) - s * poly({3, 15, 28, 20, 28, 15, 3}, G) +
                     6.0 * s * s * poly({1, 5, 9, 5, 1}, G));
  out.e1323 = -pref / (8.0 * kPi * std::pow(G, 7)) * poly({26, -56, 63}, S);
  return out;
}

double ratio_e12_over_ecp(double alpha2, double r, double Z) {
  if (!(r > 0.0) || !(Z > 0.0)) throw GeometryError("ratio needs r > 0 and Z > 0");
  const double q = Z / r;
  return alpha2 / (r * r * r) * (46.0 / 3.0) * q * q * q * q;
}

}  // namespace casimir

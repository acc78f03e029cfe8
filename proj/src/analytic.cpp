#include "casimir/analytic.hpp"

#include <cmath>

#include "casimir/error.hpp"

namespace casimir {

KernelCoefficients coefficients(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw GeometryError("kernel coefficients need positive lengths");
  return {coefficient_a(x, y), coefficient_b(x, y), coefficient_b(y, x), coefficient_c(x, y)};
}

double f_kernel(const Vector3& xvec, const Vector3& yvec, const Matrix3& alpha, const Matrix3& beta,
                const KernelCoefficients& k) {
  const double x = norm(xvec);
  const double y = norm(yvec);
  if (!(x > 0.0) || !(y > 0.0)) throw GeometryError("kernel evaluated with a zero-length vector");
  const Vector3 xh = xvec * (1.0 / x);
  const Vector3 yh = yvec * (1.0 / y);

  const double bracket = k.A * trace_of_product(alpha, beta) - k.B_xy * sandwich(yh, beta * alpha, yh) -
                         k.B_yx * sandwich(xh, alpha * beta, xh) +
                         k.C * sandwich(xh, alpha, yh) * sandwich(yh, beta, xh);
  return bracket / (4.0 * kPi * x * x * x * y * y * y * (x + y));
}

double f_kernel(const Vector3& xvec, const Vector3& yvec, const Matrix3& alpha, const Matrix3& beta) {
  return f_kernel(xvec, yvec, alpha, beta, coefficients(norm(xvec), norm(yvec)));
}

double e12_craig_power(const SystemConfig& cfg) {
  const GeometryDerived g = derive_geometry(cfg);
  const Matrix3& a1 = cfg.atom1.alpha.matrix();
  const Matrix3& a2 = cfg.atom2.alpha.matrix();
  const Vector3 n = unit(g.r12);
  const double r7 = std::pow(g.r, 7);
  return -(13.0 * trace_of_product(a1, a2) - 56.0 * sandwich(n, a1 * a2, n) +
           63.0 * sandwich(n, a1, n) * sandwich(n, a2, n)) /
         (8.0 * kPi * r7);
}

double e12_kernel(const SystemConfig& cfg) {
  const GeometryDerived g = derive_geometry(cfg);
  return -f_kernel(g.r12, g.r21, cfg.atom1.alpha.matrix(), cfg.atom2.alpha.matrix());
}

double e_cp(const PolarizabilityTensor& alpha, double Z) {
  if (!(Z > 0.0)) throw GeometryError("atom-wall energy needs Z > 0");
  const double z2 = Z * Z;
  return -alpha.trace() / (8.0 * kPi * z2 * z2);
}

ThreeBodyTerms three_body_terms(const SystemConfig& cfg) {
  const GeometryDerived g = derive_geometry(cfg);
  const Matrix3& a1 = cfg.atom1.alpha.matrix();
  const Matrix3& a2 = cfg.atom2.alpha.matrix();
  const Matrix3& b1 = reflect_tensor(cfg.atom1.alpha).matrix();
  const Matrix3& b2 = reflect_tensor(cfg.atom2.alpha).matrix();

  ThreeBodyTerms t;
  t.e123 = f_kernel(g.r12, g.r2_image1, a2, b1);
  t.e213 = f_kernel(g.r21, g.r1_image2, a1, b2);
  t.e1323 = -f_kernel(g.r2_image1, g.r1_image2, b1, b2);
  return t;
}

EnergyBreakdown analytic_energies(const SystemConfig& cfg) {
  EnergyBreakdown e;
  e.e12 = e12_kernel(cfg);
  const ThreeBodyTerms t = three_body_terms(cfg);
  e.e123 = t.e123;
  e.e213 = t.e213;
  e.e1323 = t.e1323;
  e.delta_e3 = t.e123 + t.e213 + t.e1323;
  if (cfg.atom1.position.z > 0.0) e.e_cp1 = e_cp(cfg.atom1.alpha, cfg.atom1.position.z);
  if (cfg.atom2.position.z > 0.0) e.e_cp2 = e_cp(cfg.atom2.alpha, cfg.atom2.position.z);
  return e;
}

}  // namespace casimir

#pragma once

// Closed-form Casimir-Polder energies for two atoms above a perfect mirror,
// in the static (fully retarded) limit. Units: hbar = c = 1, lengths in L,
// polarizabilities in L^3, energies in 1/L.
//
// Every atom-atom energy, with or without plate reflections, reduces to one
// kernel F(x, y; alpha, beta) of two propagation vectors and two tensors.
// Plate reflections enter through beta = diag(1,1,-1) alpha.

#include <array>
#include <optional>

#include "casimir/geometry.hpp"
#include "casimir/linalg.hpp"

namespace casimir {

/// Integer coefficients of the quartic forms sum_k c[k] x^(4-k) y^k.
namespace kernel_polynomials {
inline constexpr std::array<long long, 5> kA{1, 5, 14, 5, 1};
inline constexpr std::array<long long, 5> kB{3, 15, 26, 10, 2};
inline constexpr std::array<long long, 5> kC{1, 5, 9, 5, 1};
inline constexpr long long kAScale = 8;
inline constexpr long long kBScale = 8;
inline constexpr long long kCScale = 48;

template <typename T>
constexpr T quartic_form(const std::array<long long, 5>& c, const T& x, const T& y) {
  const T x2 = x * x;
  const T y2 = y * y;
  return T(c[0]) * x2 * x2 + T(c[1]) * x2 * x * y + T(c[2]) * x2 * y2 + T(c[3]) * x * y2 * y + T(c[4]) * y2 * y2;
}

template <typename T>
constexpr T normalized(const std::array<long long, 5>& c, long long scale, const T& x, const T& y) {
  const T s = x + y;
  const T s2 = s * s;
  return T(scale) * quartic_form(c, x, y) / (s2 * s2);
}
}  // namespace kernel_polynomials

/// A(x, y), generic over the arithmetic type so it can be evaluated exactly.
template <typename T>
constexpr T coefficient_a(const T& x, const T& y) {
  return kernel_polynomials::normalized(kernel_polynomials::kA, kernel_polynomials::kAScale, x, y);
}
template <typename T>
constexpr T coefficient_b(const T& x, const T& y) {
  return kernel_polynomials::normalized(kernel_polynomials::kB, kernel_polynomials::kBScale, x, y);
}
template <typename T>
constexpr T coefficient_c(const T& x, const T& y) {
  return kernel_polynomials::normalized(kernel_polynomials::kC, kernel_polynomials::kCScale, x, y);
}

struct KernelCoefficients {
  double A;
  double B_xy;  ///< B(x, y)
  double B_yx;  ///< B(y, x)
  double C;
};

/// Throws GeometryError unless x > 0 and y > 0.
KernelCoefficients coefficients(double x, double y);

/// F(x, y; alpha, beta) with x = |xvec|, y = |yvec|:
///
///   [A tr(alpha beta) - B(x,y) yhat.beta.alpha.yhat - B(y,x) xhat.alpha.beta.xhat
///    + C (xhat.alpha.yhat)(yhat.beta.xhat)] / (4 pi x^3 y^3 (x + y))
///
/// The tensors may be non-symmetric (reflected tensors); the operand order
/// above matters in that case.
double f_kernel(const Vector3& xvec, const Vector3& yvec, const Matrix3& alpha, const Matrix3& beta);

/// Same kernel with caller-supplied coefficients (used to probe sensitivity).
double f_kernel(const Vector3& xvec, const Vector3& yvec, const Matrix3& alpha, const Matrix3& beta,
                const KernelCoefficients& k);

struct ThreeBodyTerms {
  double e123 = 0.0;
  double e213 = 0.0;
  double e1323 = 0.0;
};

struct EnergyBreakdown {
  double e12 = 0.0;
  double e123 = 0.0;
  double e213 = 0.0;
  double e1323 = 0.0;
  double delta_e3 = 0.0;
  /// Atom-wall energies; absent for an atom on the plate (divergent there).
  std::optional<double> e_cp1;
  std::optional<double> e_cp2;

  /// e12 + delta_e3, the atom-atom interaction including plate corrections.
  double interaction() const { return e12 + delta_e3; }
  /// interaction() plus whichever atom-wall energies are finite.
  double total() const { return interaction() + e_cp1.value_or(0.0) + e_cp2.value_or(0.0); }
};

/// Anisotropic two-atom energy written out term by term:
/// -[13 tr(a1 a2) - 56 rhat.a1.a2.rhat + 63 (rhat.a1.rhat)(rhat.a2.rhat)] / (8 pi r^7).
double e12_craig_power(const SystemConfig& cfg);

/// E12 = -F(r12, r21; alpha1, alpha2).
double e12_kernel(const SystemConfig& cfg);

/// -tr(alpha) / (8 pi Z^4). Throws GeometryError for Z <= 0.
double e_cp(const PolarizabilityTensor& alpha, double Z);

///   e123  =  F(r12, r2-image1; alpha2, beta1)
///   e213  =  F(r21, r1-image2; alpha1, beta2)
///   e1323 = -F(r2-image1, r1-image2; beta1, beta2)
ThreeBodyTerms three_body_terms(const SystemConfig& cfg);

/// Everything above for one configuration.
EnergyBreakdown analytic_energies(const SystemConfig& cfg);

}  // namespace casimir

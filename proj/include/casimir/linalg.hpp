#pragma once

// Fixed-size 3-vector and 3x3 matrix used throughout the energy code.
// Storage is row-major; everything is constexpr-friendly value types.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace casimir {

inline constexpr double kPi = std::numbers::pi;

struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vector3& operator+=(const Vector3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vector3& operator-=(const Vector3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vector3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Vector3 operator+(Vector3 a, const Vector3& b) { return a += b; }
  friend constexpr Vector3 operator-(Vector3 a, const Vector3& b) { return a -= b; }
  friend constexpr Vector3 operator-(const Vector3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vector3 operator*(Vector3 a, double s) { return a *= s; }
  friend constexpr Vector3 operator*(double s, Vector3 a) { return a *= s; }
  friend constexpr bool operator==(const Vector3&, const Vector3&) = default;

  bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr double dot(const Vector3& a, const Vector3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline double norm(const Vector3& v) { return std::hypot(v.x, v.y, v.z); }

/// Caller guarantees v is nonzero.
inline Vector3 unit(const Vector3& v) { return v * (1.0 / norm(v)); }

class Matrix3 {
 public:
  constexpr Matrix3() = default;
  constexpr Matrix3(double xx, double xy, double xz,
                    double yx, double yy, double yz,
                    double zx, double zy, double zz)
      : m_{xx, xy, xz, yx, yy, yz, zx, zy, zz} {}

  static constexpr Matrix3 identity() { return diagonal(1.0, 1.0, 1.0); }
  static constexpr Matrix3 diagonal(double a, double b, double c) {
    return {a, 0.0, 0.0, 0.0, b, 0.0, 0.0, 0.0, c};
  }
  /// Dyadic product a b^T.
  static constexpr Matrix3 outer(const Vector3& a, const Vector3& b) {
    return {a.x * b.x, a.x * b.y, a.x * b.z,
            a.y * b.x, a.y * b.y, a.y * b.z,
            a.z * b.x, a.z * b.y, a.z * b.z};
  }

  constexpr double operator()(std::size_t i, std::size_t j) const { return m_[3 * i + j]; }
  constexpr double& operator()(std::size_t i, std::size_t j) { return m_[3 * i + j]; }

  constexpr Matrix3 transposed() const {
    return {m_[0], m_[3], m_[6], m_[1], m_[4], m_[7], m_[2], m_[5], m_[8]};
  }
  constexpr double trace() const { return m_[0] + m_[4] + m_[8]; }
  constexpr double determinant() const {
    return m_[0] * (m_[4] * m_[8] - m_[5] * m_[7]) - m_[1] * (m_[3] * m_[8] - m_[5] * m_[6]) +
           m_[2] * (m_[3] * m_[7] - m_[4] * m_[6]);
  }
  double max_abs() const {
    double out = 0.0;
    for (double v : m_) out = std::fmax(out, std::fabs(v));
    return out;
  }
  double frobenius_norm() const {
    double s = 0.0;
    for (double v : m_) s += v * v;
    return std::sqrt(s);
  }
  bool is_finite() const {
    for (double v : m_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  constexpr Matrix3& operator+=(const Matrix3& o) {
    for (std::size_t k = 0; k < 9; ++k) m_[k] += o.m_[k];
    return *this;
  }
  constexpr Matrix3& operator-=(const Matrix3& o) {
    for (std::size_t k = 0; k < 9; ++k) m_[k] -= o.m_[k];
    return *this;
  }
  constexpr Matrix3& operator*=(double s) {
    for (double& v : m_) v *= s;
    return *this;
  }

  friend constexpr Matrix3 operator+(Matrix3 a, const Matrix3& b) { return a += b; }
  friend constexpr Matrix3 operator-(Matrix3 a, const Matrix3& b) { return a -= b; }
  friend constexpr Matrix3 operator*(Matrix3 a, double s) { return a *= s; }
  friend constexpr Matrix3 operator*(double s, Matrix3 a) { return a *= s; }

  friend constexpr Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 c;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
        c(i, j) = s;
      }
    return c;
  }
  friend constexpr Vector3 operator*(const Matrix3& a, const Vector3& v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
            a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
            a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
  }
  friend constexpr bool operator==(const Matrix3&, const Matrix3&) = default;

 private:
  std::array<double, 9> m_{};
};

/// u . M . v
constexpr double sandwich(const Vector3& u, const Matrix3& m, const Vector3& v) { return dot(u, m * v); }

/// tr(A B) without forming the product.
constexpr double trace_of_product(const Matrix3& a, const Matrix3& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, i);
  return s;
}

}  // namespace casimir

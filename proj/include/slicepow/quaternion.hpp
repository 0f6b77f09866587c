#pragma once

// Real quaternions q = q0 + q1 i + q2 j + q3 k.

#include <array>
#include <cmath>
#include <vector>

namespace slicepow {

struct Quaternion {
  double q0 = 0.0, q1 = 0.0, q2 = 0.0, q3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a, double b, double c, double d) : q0(a), q1(b), q2(c), q3(d) {}
  static constexpr Quaternion real(double a) { return {a, 0.0, 0.0, 0.0}; }

  constexpr double operator[](int h) const {
    return h == 0 ? q0 : h == 1 ? q1 : h == 2 ? q2 : q3;
  }
  constexpr double& operator[](int h) { return h == 0 ? q0 : h == 1 ? q1 : h == 2 ? q2 : q3; }
  constexpr std::array<double, 4> coords() const { return {q0, q1, q2, q3}; }

  constexpr double scalar() const { return q0; }
  constexpr Quaternion vector() const { return {0.0, q1, q2, q3}; }
  constexpr Quaternion conj() const { return {q0, -q1, -q2, -q3}; }

  double norm() const { return std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3); }
  double vector_norm() const { return std::sqrt(q1 * q1 + q2 * q2 + q3 * q3); }

  constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.q0 + b.q0, a.q1 + b.q1, a.q2 + b.q2, a.q3 + b.q3};
}
constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.q0 - b.q0, a.q1 - b.q1, a.q2 - b.q2, a.q3 - b.q3};
}
constexpr Quaternion operator-(const Quaternion& a) { return {-a.q0, -a.q1, -a.q2, -a.q3}; }
constexpr Quaternion operator*(double s, const Quaternion& a) {
  return {s * a.q0, s * a.q1, s * a.q2, s * a.q3};
}

/// Hamilton product, written as q0p0 - <qv,pv> + q0 pv + p0 qv + qv x pv.
constexpr Quaternion qmul(const Quaternion& q, const Quaternion& p) {
  const double dot = q.q1 * p.q1 + q.q2 * p.q2 + q.q3 * p.q3;
  return {q.q0 * p.q0 - dot,
          q.q0 * p.q1 + p.q0 * q.q1 + (q.q2 * p.q3 - q.q3 * p.q2),
          q.q0 * p.q2 + p.q0 * q.q2 + (q.q3 * p.q1 - q.q1 * p.q3),
          q.q0 * p.q3 + p.q0 * q.q3 + (q.q1 * p.q2 - q.q2 * p.q1)};
}
constexpr Quaternion operator*(const Quaternion& q, const Quaternion& p) { return qmul(q, p); }

/// Multiplicative inverse; the caller guarantees q != 0.
Quaternion qinv(const Quaternion& q);

Quaternion qpow(const Quaternion& q, int k);

/// Imaginary unit I (zero scalar part, unit norm, so I*I = -1).
class ImUnit {
 public:
  /// Throws InvalidArgument unless q is an imaginary unit within `tol`.
  explicit ImUnit(const Quaternion& q, double tol = 1e-12);
  /// Normalizes the vector part of q. Throws NearReal if it vanishes.
  static ImUnit from_vector(const Quaternion& q);

  const Quaternion& value() const { return unit_; }
  operator const Quaternion&() const { return unit_; }

 private:
  Quaternion unit_;
};

inline constexpr double kRealTolerance = 1e-10;

/// The k quaternionic k-th roots of a non-real q, all in the slice C_I with
/// I = qv/|qv|, ordered by n in |q|^{1/k} exp(I (theta + 2 pi n) / k).
/// Throws NearReal when |qv| <= eps_real * (1 + |q|).
std::vector<Quaternion> quat_kth_roots(const Quaternion& q, int k,
                                       double eps_real = kRealTolerance);

}  // namespace slicepow

#pragma once

// The complexified quaternions C (x) H, identified with C^4 through the
// basis 1(x)1, 1(x)i, 1(x)j, 1(x)k. The complex unit of C is written `ı`
// in comments; it commutes with every quaternion coordinate.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "slicepow/quaternion.hpp"

namespace slicepow {

using cplx = std::complex<double>;

struct CQuat {
  std::array<cplx, 4> z{};

  constexpr CQuat() = default;
  constexpr CQuat(cplx z0, cplx z1, cplx z2, cplx z3) : z{z0, z1, z2, z3} {}
  static CQuat from_real(const Quaternion& q) { return {q.q0, q.q1, q.q2, q.q3}; }
  static CQuat scalar(cplx a) { return {a, 0.0, 0.0, 0.0}; }

  cplx& operator[](int h) { return z[static_cast<std::size_t>(h)]; }
  const cplx& operator[](int h) const { return z[static_cast<std::size_t>(h)]; }

  /// w = w0 + ı w1 with w0, w1 quaternions.
  Quaternion real_part() const { return {z[0].real(), z[1].real(), z[2].real(), z[3].real()}; }
  Quaternion imag_part() const { return {z[0].imag(), z[1].imag(), z[2].imag(), z[3].imag()}; }

  /// Quaternionic conjugate: flips the vector part.
  CQuat qconj() const { return {z[0], -z[1], -z[2], -z[3]}; }
  /// Complex conjugate: conjugates every coordinate.
  CQuat cconj() const { return {std::conj(z[0]), std::conj(z[1]), std::conj(z[2]), std::conj(z[3])}; }

  /// z1^2 + z2^2 + z3^2 (complex bilinear, no conjugation).
  cplx vector_square() const { return z[1] * z[1] + z[2] * z[2] + z[3] * z[3]; }
  /// N(z)^2 = z0^2 + z1^2 + z2^2 + z3^2.
  cplx norm_square() const { return z[0] * z[0] + vector_square(); }

  double max_abs() const;
  bool operator==(const CQuat&) const = default;
};

CQuat operator+(const CQuat& a, const CQuat& b);
CQuat operator-(const CQuat& a, const CQuat& b);
CQuat operator-(const CQuat& a);
CQuat operator*(cplx s, const CQuat& a);

/// Product in C (x) H: the Hamilton formula with complex coordinates.
CQuat cmul(const CQuat& v, const CQuat& w);
inline CQuat operator*(const CQuat& v, const CQuat& w) { return cmul(v, w); }

/// Max-norm distance between two points of C^4.
double distance(const CQuat& a, const CQuat& b);

/// pi(w, I) = w0 + I w1.
Quaternion project_pi(const CQuat& w, const ImUnit& unit);

/// Phi_q(w) = sum_h (z_h - q_h)^2; vanishes exactly on the cone Z_q.
cplx phi_q(const CQuat& w, const Quaternion& q);

/// Imaginary unit of C (x) H: zero scalar coordinate and z1^2+z2^2+z3^2 = 1.
class CImUnit {
 public:
  /// Throws InvalidArgument if s is not in the unit quadric within `tol`.
  explicit CImUnit(const CQuat& s, double tol = 1e-12);
  const CQuat& value() const { return s_; }
  operator const CQuat&() const { return s_; }

 private:
  CQuat s_;
};

enum class StratumTag { OMEGA_K, OMEGA_ONLY, V_MINUS1, V_0, V_INF, V_RSQ };

struct Stratum {
  StratumTag tag = StratumTag::OMEGA_K;
  int root_index = -1;  // index into the positive roots R_k for V_RSQ

  bool operator==(const Stratum&) const = default;
};

std::string to_string(StratumTag tag);

inline constexpr double kStratumTolerance = 1e-10;

/// Locates w relative to Omega_k, Omega and the degenerate quadrics
/// V_{-1}, V_inf, V_0, V_{r^2}. A quantity of degree two vanishes when its
/// modulus is at most tol * (1 + |w|_inf^2); z0 uses the same threshold;
/// the polynomial p1^{k-1}, homogeneous of degree k-1, is compared against
/// tol * (1 + |w|_inf)^{k-1}. Priority when several vanish:
/// V_{-1} > V_inf > V_0 > V_{r^2} > OMEGA_ONLY.
Stratum classify_stratum(const CQuat& w, int k, double tol = kStratumTolerance);

/// True when w is off V_{-1}, V_inf and V_0 (membership in Omega).
bool in_omega(const CQuat& w, double tol = kStratumTolerance);

}  // namespace slicepow

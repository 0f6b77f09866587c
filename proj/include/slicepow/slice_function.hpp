#pragma once

// Stem functions F : U -> C (x) H with F(conj z) = conj F(z), and the slice
// functions f(a + I b) = F0(a + ı b) + I F1(a + ı b) they induce.
//
// A polynomial stem is stored as coefficients c_n in C (x) H of z^n. On a
// WHOLE_PLANE domain every coefficient is real, which is exactly the stem
// symmetry for polynomials. UPPER_ONLY stems describe F on the upper
// half-plane (complex coefficients allowed); the lower half-plane follows by
// symmetry. This is how the locally constant functions J and l+/- are carried.

#include <functional>
#include <utility>
#include <vector>

#include "slicepow/complexified.hpp"

namespace slicepow {

enum class StemDomain { WHOLE_PLANE, UPPER_ONLY, SAMPLED };

class StemPoly {
 public:
  StemPoly() = default;
  /// Throws InvalidArgument if `domain` is WHOLE_PLANE and some coefficient
  /// has an imaginary part above 1e-12 (relative to the largest coefficient).
  explicit StemPoly(std::vector<CQuat> coeffs, StemDomain domain = StemDomain::WHOLE_PLANE);

  /// Builds F = c0 + c1 i + c2 j + c3 k from its four coordinate polynomials.
  static StemPoly from_components(const std::vector<cplx>& c0, const std::vector<cplx>& c1,
                                  const std::vector<cplx>& c2, const std::vector<cplx>& c3,
                                  StemDomain domain = StemDomain::WHOLE_PLANE);
  /// Stem of the regular polynomial q^0 a_0 + q a_1 + ... + q^n a_n.
  static StemPoly from_quaternion_coeffs(const std::vector<Quaternion>& coeffs);
  static StemPoly constant(const CQuat& c, StemDomain domain = StemDomain::WHOLE_PLANE);
  /// Stem of the identity function q (that is, z).
  static StemPoly identity();

  const std::vector<CQuat>& coeffs() const { return coeffs_; }
  std::vector<cplx> component(int h) const;
  StemDomain domain() const { return domain_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double max_coeff() const;

  /// Horner evaluation of the stored polynomial, with no symmetry applied.
  CQuat eval_raw(cplx z) const;
  /// F(z); for UPPER_ONLY stems and Im z < 0 this is conj F(conj z).
  CQuat operator()(cplx z) const;

  StemPoly derivative() const;

  /// True when c1 = c2 = c3 = 0 within `tol` (the induced function is slice preserving).
  bool slice_preserving(double tol = 1e-12) const;

 private:
  void trim();

  std::vector<CQuat> coeffs_;
  StemDomain domain_ = StemDomain::WHOLE_PLANE;
};

StemPoly operator+(const StemPoly& a, const StemPoly& b);
StemPoly operator-(const StemPoly& a, const StemPoly& b);
StemPoly operator*(cplx s, const StemPoly& a);

/// Discretized stem: F known only at the listed points (and linearly
/// interpolated along consecutive samples).
class StemSampled {
 public:
  StemSampled() = default;
  explicit StemSampled(std::vector<std::pair<cplx, CQuat>> samples, double tol = 1e-9)
      : samples_(std::move(samples)), tol_(tol) {}

  const std::vector<std::pair<cplx, CQuat>>& samples() const { return samples_; }
  /// Throws OutOfDomain if z is neither a sample nor on a segment between
  /// two consecutive samples (within the interpolation tolerance).
  CQuat operator()(cplx z) const;

 private:
  std::vector<std::pair<cplx, CQuat>> samples_;
  double tol_ = 1e-9;
};

/// Uniform evaluator used by path continuation.
using StemFn = std::function<CQuat(cplx)>;
StemFn stem_fn(const StemPoly& F);
StemFn stem_fn(const StemSampled& F);

// Star algebra ------------------------------------------------------------

/// f * g: convolution of coefficients with the C (x) H product.
StemPoly star_product(const StemPoly& F, const StemPoly& G);
/// f^c: negates c1, c2, c3.
StemPoly star_conj(const StemPoly& F);
/// f^s = f * f^c; always slice preserving.
StemPoly symmetrization(const StemPoly& F);
StemPoly star_power(const StemPoly& F, int k);

/// J(q) = q_v / |q_v| on domains without real points: the constant ı on the
/// upper half-plane.
StemPoly j_function();
/// l+ = (1 - J i)/2 and l- = (1 + J i)/2, complementary star idempotents.
StemPoly ell_plus();
StemPoly ell_minus();

/// f(pi(z, I)) = pi(F(z), I).
Quaternion eval_slice(const StemPoly& F, cplx z, const ImUnit& unit);
Quaternion eval_slice(const StemSampled& F, cplx z, const ImUnit& unit);

/// Peirce decomposition f = f+ * l+ + f- * l- with f+, f- regular
/// polynomials with quaternionic coefficients (real stems). For the stored
/// upper stem a + ı b (a, b quaternionic polynomials) the parts are
/// f+ = a + b i and f- = a - b i. Throws RealPointsInDomain for WHOLE_PLANE.
std::pair<StemPoly, StemPoly> peirce_parts(const StemPoly& F);

// Differential singularities --------------------------------------------

enum class SingularityVerdict { NONSINGULAR, SPHERICAL_DERIV_ZERO, SLICE_DERIV_ZERO, TANGENT_CASE };

const char* to_string(SingularityVerdict v);

inline constexpr double kSingularTolerance = 1e-9;

/// Tests, in order: F1(z) = 0 (spherical derivative), F'(z) = 0 (slice
/// derivative), and pi(F'(z), I) F1(z)^{-1} in A_I = {p : I p + p I = 0}.
/// Thresholds scale with max|c_n| (1 + |z|)^deg. Requires Im z > 0.
SingularityVerdict classify_differential(const StemPoly& F, cplx z, const ImUnit& unit,
                                         double tol = kSingularTolerance);

/// Vanishing order at z of zeta -> Phi_{f(q)}(F(zeta)), q = pi(z, I), read
/// from the Taylor coefficients of that polynomial. Capped at its degree.
/// Throws IdenticallyZero when every coefficient vanishes.
int phi_multiplicity(const StemPoly& F, cplx z, const ImUnit& unit,
                     double tol = kSingularTolerance);

}  // namespace slicepow

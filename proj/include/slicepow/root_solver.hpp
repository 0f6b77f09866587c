#pragma once

// Pointwise k-th roots in C (x) H: the k^2 preimages of a point of Omega
// under sigma_k.
//
// A point w with z_v^2 != 0 is written w = v0 e0 + v1 s through the rho map
// (u0, u1, s) -> u0 e0 + u1 s, where s lies on the unit quadric. sigma_k
// keeps s and maps (u0, u1) to (p0^k(u0, u1^2), u1 p1^{k-1}(u0, u1^2)).
// With t = u0/u1 and lambda = v0/v1 the equation reduces, through the
// Cayley transform c(z) = (z - ı)/(z + ı), to c(t)^k = c(lambda), then to
// u1^k = v1 / p1^{k-1}(t, 1).

#include <string>
#include <utility>
#include <vector>

#include "slicepow/complexified.hpp"

namespace slicepow {

struct RhoLift {
  cplx u0;
  cplx u1;
  CQuat s;  // z0 = 0 and z1^2 + z2^2 + z3^2 = 1

  CQuat reconstruct() const { return CQuat::scalar(u0) + u1 * s; }
};

struct BranchLabel {
  int m = 0;  // which k-th root of c(lambda)
  int n = 0;  // which k-th root of v1 / p1^{k-1}(t_m, 1)

  std::string str() const { return std::to_string(m) + "." + std::to_string(n); }
  auto operator<=>(const BranchLabel&) const = default;
};

struct RootBranch {
  BranchLabel label;
  CQuat value;
  RhoLift lift;
  cplx t;                 // the Cayley solution t_m = u0 / u1
  double residual = 0.0;  // |sigma_k(value) - w|_inf
  bool in_omega_k = true; // classify_stratum(value, k) == OMEGA_K
};

/// Principal lift: u1 = sqrt(z_v^2) (principal branch), s = z_v / u1,
/// u0 = z0. Throws OnVinfinity when z_v^2 vanishes within tolerance.
RhoLift rho_lift(const CQuat& w, double tol = kStratumTolerance);

/// The other point of the rho fiber: (u0, -u1, -s).
RhoLift gamma(const RhoLift& lift);

/// (z - ı)/(z + ı). Throws PoleAtMinusI at z = -ı.
cplx cayley(cplx z);
/// ı (1 + c)/(1 - c). Throws PoleAtMinusI at c = 1 (image of infinity).
cplx cayley_inverse(cplx c);

/// The k^2 preimages of w under sigma_k, labelled (m, n) by increasing
/// argument starting from the principal k-th roots; sorted by label.
///
/// The Cayley reduction needs z_v^2 != 0 and z0^2 + z_v^2 != 0. A target on
/// V_{-1} or V_inf therefore throws NotInOmega carrying the stratum tag.
/// Targets on V_0 are solved (lambda = 0 is a regular value of the
/// reduction). Each output records whether it lies in Omega_k.
std::vector<RootBranch> point_star_roots(const CQuat& w, int k, double tol = kStratumTolerance);

/// Same computation started from a given rho lift of w (either point of the fiber).
std::vector<RootBranch> point_star_roots_from_lift(const CQuat& w, const RhoLift& lift, int k,
                                                   double tol = kStratumTolerance);

}  // namespace slicepow

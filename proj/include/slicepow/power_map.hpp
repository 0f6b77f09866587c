#pragma once

// The k-th power map sigma_k on C (x) H and the polynomials p0^k, p1^{k-1}
// defined by (x + I y)^k = p0^k(x, y^2) + I y p1^{k-1}(x, y^2).

#include <utility>
#include <vector>

#include "slicepow/complexified.hpp"

namespace slicepow {

/// (p0^k(x, ysq), p1^{k-1}(x, ysq)) via the integer recurrence
///   p0^m = x p0^{m-1} - ysq p1^{m-2},  p1^{m-1} = p0^{m-1} + x p1^{m-2},
/// seeded with p0^0 = 1, p1^{-1} = 0. No square roots are taken.
std::pair<cplx, cplx> p_pair(int k, cplx x, cplx ysq);

/// sigma_k(w) = w^k, computed as (p0^k, z1 p1^{k-1}, z2 p1^{k-1}, z3 p1^{k-1}).
CQuat sigma_k(const CQuat& w, int k);

/// det D sigma_k(w) = k^2 (N(w)^2)^{k-1} [p1^{k-1}(z0, z_v^2)]^2.
/// The (u0, u1) block contributes k^2 (N^2)^{k-1}, each of the two
/// directions of s a factor p1^{k-1}. Degree 4(k - 1), as it must be; the
/// shorter k^2 N^2 [p1]^2 agrees only for k = 2.
cplx sigma_k_jacobian_det(const CQuat& w, int k);

/// Q^k(t) = Im((t + ı)^k) = p1^{k-1}(t, 1), evaluated for complex t.
cplx q_poly(int k, cplx t);

/// The k-1 real roots of Q^k, ascending. They are cot(n pi / k), n = 1..k-1,
/// each polished by one Newton step.
std::vector<double> q_poly_roots(int k);

/// Per-k constants: all roots of Q^k and the positive ones R_k.
class PowerTables {
 public:
  explicit PowerTables(int k);

  int k() const { return k_; }
  const std::vector<double>& q_roots() const { return roots_; }
  /// R_k: the floor((k-1)/2) positive roots, ascending.
  const std::vector<double>& positive_roots() const { return positive_; }

  std::pair<cplx, cplx> p(cplx x, cplx ysq) const { return p_pair(k_, x, ysq); }

 private:
  int k_;
  std::vector<double> roots_;
  std::vector<double> positive_;
};

}  // namespace slicepow

#include "slicepow/root_solver.hpp"

#include <numbers>

#include "slicepow/error.hpp"
#include "slicepow/power_map.hpp"

namespace slicepow {

namespace {

constexpr cplx kI{0.0, 1.0};

// The k values |c|^{1/k} exp(ı (arg c + 2 pi n)/k), n = 0..k-1.
std::vector<cplx> kth_roots(cplx c, int k) {
  const double r = std::pow(std::abs(c), 1.0 / k);
  const double a = std::arg(c);
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int n = 0; n < k; ++n) out.push_back(std::polar(r, (a + 2.0 * std::numbers::pi * n) / k));
  return out;
}

}  // namespace

RhoLift rho_lift(const CQuat& w, double tol) {
  const cplx vsq = w.vector_square();
  const double m = w.max_abs();
  if (std::abs(vsq) <= tol * (1.0 + m * m))
    throw Error(ErrorKind::OnVinfinity, "z_v^2 vanishes: no rho lift", to_string(StratumTag::V_INF));
  const cplx u1 = std::sqrt(vsq);
  return {w[0], u1, CQuat{0.0, w[1] / u1, w[2] / u1, w[3] / u1}};
}

RhoLift gamma(const RhoLift& lift) { return {lift.u0, -lift.u1, -lift.s}; }

cplx cayley(cplx z) {
  if (z == -kI) throw Error(ErrorKind::PoleAtMinusI, "Cayley transform has a pole at -i");
  return (z - kI) / (z + kI);
}

cplx cayley_inverse(cplx c) {
  if (c == 1.0) throw Error(ErrorKind::PoleAtMinusI, "inverse Cayley transform has a pole at 1");
  return kI * (1.0 + c) / (1.0 - c);
}

std::vector<RootBranch> point_star_roots(const CQuat& w, int k, double tol) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const Stratum st = classify_stratum(w, k, tol);
  if (st.tag == StratumTag::V_MINUS1 || st.tag == StratumTag::V_INF)
    throw Error(ErrorKind::NotInOmega, "target lies on " + to_string(st.tag), to_string(st.tag));
  return point_star_roots_from_lift(w, rho_lift(w, tol), k, tol);
}

std::vector<RootBranch> point_star_roots_from_lift(const CQuat& w, const RhoLift& lift, int k,
                                                   double tol) {
  const cplx lambda = lift.u0 / lift.u1;
  // v0 = ±ı v1 is V_{-1}; point_star_roots screens it, but a caller-built lift may not.
  if (std::abs(lambda - kI) <= tol * (1.0 + std::abs(lambda)) ||
      std::abs(lambda + kI) <= tol * (1.0 + std::abs(lambda)))
    throw Error(ErrorKind::NotInOmega, "lambda = ±i: target lies on V_MINUS1",
                to_string(StratumTag::V_MINUS1));
  const cplx c = cayley(lambda);

  const auto cm = kth_roots(c, k);
  std::vector<RootBranch> out;
  out.reserve(static_cast<std::size_t>(k * k));
  for (int m = 0; m < k; ++m) {
    if (std::abs(cm[static_cast<std::size_t>(m)] - 1.0) <= 1e-14)
      throw Error(ErrorKind::NotInOmega, "Cayley root landed on 1; target is numerically degenerate",
                  to_string(classify_stratum(w, k, tol).tag));
    const cplx t = cayley_inverse(cm[static_cast<std::size_t>(m)]);
    const cplx q = p_pair(k, t, 1.0).second;
    const auto omegas = kth_roots(lift.u1 / q, k);
    for (int n = 0; n < k; ++n) {
      const cplx u1 = omegas[static_cast<std::size_t>(n)];
      RootBranch b;
      b.label = {m, n};
      b.lift = {t * u1, u1, lift.s};
      b.value = b.lift.reconstruct();
      b.t = t;
      b.residual = distance(sigma_k(b.value, k), w);
      b.in_omega_k = classify_stratum(b.value, k, tol).tag == StratumTag::OMEGA_K;
      out.push_back(b);
    }
  }
  return out;
}

}  // namespace slicepow

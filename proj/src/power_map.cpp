#include "slicepow/power_map.hpp"

#include <algorithm>
#include <numbers>

#include "slicepow/error.hpp"

namespace slicepow {

std::pair<cplx, cplx> p_pair(int k, cplx x, cplx ysq) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  cplx p0 = 1.0;  // p0^0
  cplx p1 = 0.0;  // p1^{-1}
  for (int m = 1; m <= k; ++m) {
    const cplx next0 = x * p0 - ysq * p1;
    const cplx next1 = p0 + x * p1;
    p0 = next0;
    p1 = next1;
  }
  return {p0, p1};
}

CQuat sigma_k(const CQuat& w, int k) {
  const auto [p0, p1] = p_pair(k, w[0], w.vector_square());
  return {p0, w[1] * p1, w[2] * p1, w[3] * p1};
}

cplx sigma_k_jacobian_det(const CQuat& w, int k) {
  const cplx p1 = p_pair(k, w[0], w.vector_square()).second;
  return static_cast<double>(k) * static_cast<double>(k) * std::pow(w.norm_square(), k - 1) * p1 * p1;
}

cplx q_poly(int k, cplx t) { return p_pair(k, t, 1.0).second; }

namespace {

// d/dt Im((t+ı)^k) = k Im((t+ı)^{k-1}) = k p1^{k-2}(t,1).
double q_poly_derivative(int k, double t) {
  if (k == 1) return 0.0;
  return k * q_poly(k - 1, t).real();
}

}  // namespace

std::vector<double> q_poly_roots(int k) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "Q^k has roots only for k >= 2");
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(k - 1));
  for (int n = k - 1; n >= 1; --n) {
    const double angle = n * std::numbers::pi / k;
    double t = std::cos(angle) / std::sin(angle);
    const double d = q_poly_derivative(k, t);
    if (d != 0.0) t -= q_poly(k, t).real() / d;
    roots.push_back(t);
  }
  // cot is decreasing on (0, pi), so n = k-1..1 is already ascending.
  return roots;
}

PowerTables::PowerTables(int k) : k_(k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (k >= 2) roots_ = q_poly_roots(k);
  // cot(n pi / k) > 0 exactly when 2n < k; select by index, not by sign,
  // so the root at zero for even k never leaks in through rounding.
  for (int n = 1; 2 * n < k; ++n) positive_.push_back(roots_[static_cast<std::size_t>(k - 1 - n)]);
  std::sort(positive_.begin(), positive_.end());
}

}  // namespace slicepow

#include "slicepow/complexified.hpp"

#include <algorithm>

#include "slicepow/error.hpp"
#include "slicepow/power_map.hpp"

namespace slicepow {

double CQuat::max_abs() const {
  double m = 0.0;
  for (const auto& c : z) m = std::max(m, std::abs(c));
  return m;
}

CQuat operator+(const CQuat& a, const CQuat& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
CQuat operator-(const CQuat& a, const CQuat& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
CQuat operator-(const CQuat& a) { return {-a[0], -a[1], -a[2], -a[3]}; }
CQuat operator*(cplx s, const CQuat& a) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }

CQuat cmul(const CQuat& v, const CQuat& w) {
  const cplx dot = v[1] * w[1] + v[2] * w[2] + v[3] * w[3];
  return {v[0] * w[0] - dot,
          v[0] * w[1] + w[0] * v[1] + (v[2] * w[3] - v[3] * w[2]),
          v[0] * w[2] + w[0] * v[2] + (v[3] * w[1] - v[1] * w[3]),
          v[0] * w[3] + w[0] * v[3] + (v[1] * w[2] - v[2] * w[1])};
}

double distance(const CQuat& a, const CQuat& b) { return (a - b).max_abs(); }

Quaternion project_pi(const CQuat& w, const ImUnit& unit) {
  return w.real_part() + qmul(unit.value(), w.imag_part());
}

cplx phi_q(const CQuat& w, const Quaternion& q) {
  cplx sum = 0.0;
  for (int h = 0; h < 4; ++h) {
    const cplx d = w[h] - q[h];
    sum += d * d;
  }
  return sum;
}

CImUnit::CImUnit(const CQuat& s, double tol) : s_(s) {
  if (std::abs(s[0]) > tol || std::abs(s.vector_square() - 1.0) > tol)
    throw Error(ErrorKind::InvalidArgument, "not an imaginary unit of C (x) H");
}

std::string to_string(StratumTag tag) {
  switch (tag) {
    case StratumTag::OMEGA_K: return "OMEGA_K";
    case StratumTag::OMEGA_ONLY: return "OMEGA_ONLY";
    case StratumTag::V_MINUS1: return "V_MINUS1";
    case StratumTag::V_0: return "V_0";
    case StratumTag::V_INF: return "V_INF";
    case StratumTag::V_RSQ: return "V_RSQ";
  }
  return "UNKNOWN";
}

namespace {

// Relative threshold shared by z0, z_v^2 and N^2.
double vanish_threshold(const CQuat& w, double tol) {
  const double m = w.max_abs();
  return tol * (1.0 + m * m);
}

}  // namespace

bool in_omega(const CQuat& w, double tol) {
  const double th = vanish_threshold(w, tol);
  return std::abs(w.norm_square()) > th && std::abs(w.vector_square()) > th && std::abs(w[0]) > th;
}

Stratum classify_stratum(const CQuat& w, int k, double tol) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const double th = vanish_threshold(w, tol);
  const cplx vsq = w.vector_square();

  if (std::abs(w.norm_square()) <= th) return {StratumTag::V_MINUS1, -1};
  if (std::abs(vsq) <= th) return {StratumTag::V_INF, -1};
  if (std::abs(w[0]) <= th) return {StratumTag::V_0, -1};

  const PowerTables tables(k);
  const double m = w.max_abs();
  const auto& rk = tables.positive_roots();
  const cplx z0sq = w[0] * w[0];
  for (std::size_t n = 0; n < rk.size(); ++n) {
    const double rsq = rk[n] * rk[n];
    if (std::abs(z0sq - rsq * vsq) <= th * (1.0 + rsq))
      return {StratumTag::V_RSQ, static_cast<int>(n)};
  }

  const cplx p1 = p_pair(k, w[0], vsq).second;
  if (std::abs(p1) <= tol * std::pow(1.0 + m, k - 1)) return {StratumTag::OMEGA_ONLY, -1};
  return {StratumTag::OMEGA_K, -1};
}

}  // namespace slicepow

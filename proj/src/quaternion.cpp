#include "slicepow/quaternion.hpp"

#include <numbers>
#include <string>

#include "slicepow/error.hpp"

namespace slicepow {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NearReal: return "NearReal";
    case ErrorKind::OnVinfinity: return "OnVinfinity";
    case ErrorKind::NotInOmega: return "NotInOmega";
    case ErrorKind::PoleAtMinusI: return "PoleAtMinusI";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::RealPointsInDomain: return "RealPointsInDomain";
    case ErrorKind::IdenticallyZero: return "IdenticallyZero";
    case ErrorKind::AmbiguousTracking: return "AmbiguousTracking";
    case ErrorKind::StratumHit: return "StratumHit";
    case ErrorKind::MatchingFailure: return "MatchingFailure";
    case ErrorKind::AnchorNotReal: return "AnchorNotReal";
    case ErrorKind::AnchorNotInOmega: return "AnchorNotInOmega";
    case ErrorKind::PathNotSymmetric: return "PathNotSymmetric";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Quaternion qinv(const Quaternion& q) {
  const double n2 = q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
  return (1.0 / n2) * q.conj();
}

Quaternion qpow(const Quaternion& q, int k) {
  Quaternion r = Quaternion::real(1.0);
  for (int m = 0; m < k; ++m) r = r * q;
  return r;
}

ImUnit::ImUnit(const Quaternion& q, double tol) : unit_(q) {
  if (std::abs(q.q0) > tol || std::abs(q.vector_norm() - 1.0) > tol)
    throw Error(ErrorKind::InvalidArgument, "not an imaginary unit");
}

ImUnit ImUnit::from_vector(const Quaternion& q) {
  const double n = q.vector_norm();
  if (n == 0.0) throw Error(ErrorKind::NearReal, "vector part vanishes");
  return ImUnit(Quaternion{0.0, q.q1 / n, q.q2 / n, q.q3 / n});
}

std::vector<Quaternion> quat_kth_roots(const Quaternion& q, int k, double eps_real) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const double vn = q.vector_norm();
  const double n = q.norm();
  if (vn <= eps_real * (1.0 + n))
    throw Error(ErrorKind::NearReal, "quaternion is real within tolerance; its k-th roots are not isolated");

  const Quaternion unit{0.0, q.q1 / vn, q.q2 / vn, q.q3 / vn};
  const double theta = std::atan2(vn, q.q0);
  const double radius = std::pow(n, 1.0 / k);

  std::vector<Quaternion> roots;
  roots.reserve(k);
  for (int m = 0; m < k; ++m) {
    const double phi = (theta + 2.0 * std::numbers::pi * m) / k;
    roots.push_back(Quaternion::real(radius * std::cos(phi)) + (radius * std::sin(phi)) * unit);
  }
  return roots;
}

}  // namespace slicepow

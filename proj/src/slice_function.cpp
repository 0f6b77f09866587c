#include "slicepow/slice_function.hpp"

#include <algorithm>
#include <cmath>

#include "slicepow/error.hpp"

namespace slicepow {

namespace {

StemDomain combine(StemDomain a, StemDomain b) {
  if (a == StemDomain::UPPER_ONLY || b == StemDomain::UPPER_ONLY) return StemDomain::UPPER_ONLY;
  return StemDomain::WHOLE_PLANE;
}

double quaternion_norm(const CQuat& w) {
  double s = 0.0;
  for (int h = 0; h < 4; ++h) s += std::norm(w[h]);
  return std::sqrt(s);
}

}  // namespace

StemPoly::StemPoly(std::vector<CQuat> coeffs, StemDomain domain)
    : coeffs_(std::move(coeffs)), domain_(domain) {
  if (domain_ == StemDomain::SAMPLED)
    throw Error(ErrorKind::InvalidArgument, "polynomial stems cannot carry the SAMPLED tag");
  if (coeffs_.empty()) coeffs_.push_back(CQuat{});
  if (domain_ == StemDomain::WHOLE_PLANE) {
    const double scale = std::max(1.0, max_coeff());
    for (const auto& c : coeffs_)
      for (int h = 0; h < 4; ++h)
        if (std::abs(c[h].imag()) > 1e-12 * scale)
          throw Error(ErrorKind::InvalidArgument,
                      "whole-plane stem needs real coefficients (F(conj z) = conj F(z))");
  }
  trim();
}

void StemPoly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == CQuat{}) coeffs_.pop_back();
}

StemPoly StemPoly::from_components(const std::vector<cplx>& c0, const std::vector<cplx>& c1,
                                   const std::vector<cplx>& c2, const std::vector<cplx>& c3,
                                   StemDomain domain) {
  const std::size_t n = std::max({c0.size(), c1.size(), c2.size(), c3.size(), std::size_t{1}});
  std::vector<CQuat> coeffs(n);
  const std::vector<cplx>* parts[4] = {&c0, &c1, &c2, &c3};
  for (int h = 0; h < 4; ++h)
    for (std::size_t i = 0; i < parts[h]->size(); ++i) coeffs[i][h] = (*parts[h])[i];
  return StemPoly(std::move(coeffs), domain);
}

StemPoly StemPoly::from_quaternion_coeffs(const std::vector<Quaternion>& coeffs) {
  std::vector<CQuat> c;
  c.reserve(coeffs.size());
  for (const auto& q : coeffs) c.push_back(CQuat::from_real(q));
  return StemPoly(std::move(c));
}

StemPoly StemPoly::constant(const CQuat& c, StemDomain domain) { return StemPoly({c}, domain); }

StemPoly StemPoly::identity() { return StemPoly({CQuat{}, CQuat::scalar(1.0)}); }

std::vector<cplx> StemPoly::component(int h) const {
  std::vector<cplx> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c[h]);
  return out;
}

double StemPoly::max_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, c.max_abs());
  return m;
}

CQuat StemPoly::eval_raw(cplx z) const {
  CQuat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = z * acc + *it;
  return acc;
}

CQuat StemPoly::operator()(cplx z) const {
  if (domain_ == StemDomain::UPPER_ONLY && z.imag() < 0.0) return eval_raw(std::conj(z)).cconj();
  return eval_raw(z);
}

StemPoly StemPoly::derivative() const {
  if (coeffs_.size() <= 1) return StemPoly({CQuat{}}, domain_);
  std::vector<CQuat> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) d.push_back(static_cast<double>(n) * coeffs_[n]);
  return StemPoly(std::move(d), domain_);
}

bool StemPoly::slice_preserving(double tol) const {
  for (const auto& c : coeffs_)
    for (int h = 1; h < 4; ++h)
      if (std::abs(c[h]) > tol) return false;
  return true;
}

StemPoly operator+(const StemPoly& a, const StemPoly& b) {
  std::vector<CQuat> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] = c[i] + a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] = c[i] + b.coeffs()[i];
  return StemPoly(std::move(c), combine(a.domain(), b.domain()));
}

StemPoly operator-(const StemPoly& a, const StemPoly& b) { return a + cplx(-1.0) * b; }

StemPoly operator*(cplx s, const StemPoly& a) {
  std::vector<CQuat> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(s * x);
  const StemDomain d = (s.imag() != 0.0) ? StemDomain::UPPER_ONLY : a.domain();
  return StemPoly(std::move(c), d);
}

CQuat StemSampled::operator()(cplx z) const {
  for (const auto& [p, v] : samples_)
    if (std::abs(p - z) <= tol_) return v;
  for (std::size_t i = 0; i + 1 < samples_.size(); ++i) {
    const cplx a = samples_[i].first;
    const cplx b = samples_[i + 1].first;
    const cplx ab = b - a;
    if (std::abs(ab) == 0.0) continue;
    const cplx s = (z - a) / ab;
    if (std::abs(s.imag()) * std::abs(ab) <= tol_ && s.real() >= 0.0 && s.real() <= 1.0) {
      const double t = s.real();
      return cplx(1.0 - t) * samples_[i].second + cplx(t) * samples_[i + 1].second;
    }
  }
  throw Error(ErrorKind::OutOfDomain, "sampled stem queried away from its samples");
}

StemFn stem_fn(const StemPoly& F) {
  return [F](cplx z) { return F(z); };
}

StemFn stem_fn(const StemSampled& F) {
  return [F](cplx z) { return F(z); };
}

StemPoly star_product(const StemPoly& F, const StemPoly& G) {
  const auto& a = F.coeffs();
  const auto& b = G.coeffs();
  std::vector<CQuat> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + cmul(a[i], b[j]);
  return StemPoly(std::move(c), combine(F.domain(), G.domain()));
}

StemPoly star_conj(const StemPoly& F) {
  std::vector<CQuat> c;
  c.reserve(F.coeffs().size());
  for (const auto& x : F.coeffs()) c.push_back(x.qconj());
  return StemPoly(std::move(c), F.domain());
}

StemPoly symmetrization(const StemPoly& F) { return star_product(F, star_conj(F)); }

StemPoly star_power(const StemPoly& F, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  StemPoly acc = F;
  for (int m = 1; m < k; ++m) acc = star_product(acc, F);
  return acc;
}

StemPoly j_function() { return StemPoly::constant(CQuat::scalar(cplx(0.0, 1.0)), StemDomain::UPPER_ONLY); }

StemPoly ell_plus() {
  return StemPoly::constant({0.5, cplx(0.0, -0.5), 0.0, 0.0}, StemDomain::UPPER_ONLY);
}

StemPoly ell_minus() {
  return StemPoly::constant({0.5, cplx(0.0, 0.5), 0.0, 0.0}, StemDomain::UPPER_ONLY);
}

Quaternion eval_slice(const StemPoly& F, cplx z, const ImUnit& unit) {
  return project_pi(F(z), unit);
}

Quaternion eval_slice(const StemSampled& F, cplx z, const ImUnit& unit) {
  return project_pi(F(z), unit);
}

std::pair<StemPoly, StemPoly> peirce_parts(const StemPoly& F) {
  if (F.domain() == StemDomain::WHOLE_PLANE)
    throw Error(ErrorKind::RealPointsInDomain,
                "Peirce decomposition needs a domain without real points");
  const Quaternion unit_i{0.0, 1.0, 0.0, 0.0};
  std::vector<Quaternion> plus, minus;
  for (const auto& c : F.coeffs()) {
    const Quaternion a = c.real_part();
    const Quaternion bi = qmul(c.imag_part(), unit_i);
    plus.push_back(a + bi);
    minus.push_back(a - bi);
  }
  return {StemPoly::from_quaternion_coeffs(plus), StemPoly::from_quaternion_coeffs(minus)};
}

const char* to_string(SingularityVerdict v) {
  switch (v) {
    case SingularityVerdict::NONSINGULAR: return "NONSINGULAR";
    case SingularityVerdict::SPHERICAL_DERIV_ZERO: return "SPHERICAL_DERIV_ZERO";
    case SingularityVerdict::SLICE_DERIV_ZERO: return "SLICE_DERIV_ZERO";
    case SingularityVerdict::TANGENT_CASE: return "TANGENT_CASE";
  }
  return "UNKNOWN";
}

namespace {

double stem_scale(const StemPoly& F, cplx z) {
  return std::max(F.max_coeff(), 1e-300) * std::pow(1.0 + std::abs(z), std::max(F.degree(), 1));
}

}  // namespace

SingularityVerdict classify_differential(const StemPoly& F, cplx z, const ImUnit& unit, double tol) {
  if (!(z.imag() > 0.0))
    throw Error(ErrorKind::InvalidArgument, "classification needs Im z > 0");
  const double scale = stem_scale(F, z);
  const CQuat value = F(z);
  const Quaternion spherical = value.imag_part();
  if (spherical.norm() <= tol * scale) return SingularityVerdict::SPHERICAL_DERIV_ZERO;

  const CQuat slope = F.derivative()(z);
  if (quaternion_norm(slope) <= tol * scale * std::max(F.degree(), 1))
    return SingularityVerdict::SLICE_DERIV_ZERO;

  const Quaternion& I = unit.value();
  const Quaternion a = qmul(project_pi(slope, unit), qinv(spherical));
  if ((qmul(I, a) + qmul(a, I)).norm() <= tol * a.norm()) return SingularityVerdict::TANGENT_CASE;
  return SingularityVerdict::NONSINGULAR;
}

int phi_multiplicity(const StemPoly& F, cplx z, const ImUnit& unit, double tol) {
  const Quaternion q = eval_slice(F, z, unit);
  // P(zeta) = sum_h (F_h(zeta) - q_h)^2 as an explicit polynomial.
  std::vector<cplx> poly(static_cast<std::size_t>(2 * F.degree() + 1), 0.0);
  for (int h = 0; h < 4; ++h) {
    std::vector<cplx> d = F.component(h);
    d[0] -= q[h];
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) poly[i + j] += d[i] * d[j];
  }
  double pmax = 0.0;
  for (const auto& c : poly) pmax = std::max(pmax, std::abs(c));
  const int deg = static_cast<int>(poly.size()) - 1;
  const double threshold = tol * std::max(pmax, 1e-300) * std::pow(1.0 + std::abs(z), deg);

  // Taylor coefficients at z by repeated synthetic division.
  std::vector<cplx> work = poly;
  for (int j = 0; j <= deg; ++j) {
    cplx acc = 0.0;
    for (int i = deg; i >= j; --i) {
      acc = acc * z + work[static_cast<std::size_t>(i)];
      work[static_cast<std::size_t>(i)] = acc;
    }
    if (std::abs(work[static_cast<std::size_t>(j)]) > threshold) return j;
  }
  throw Error(ErrorKind::IdenticallyZero,
              "Phi_{f(q)} o F vanishes identically (tangency: F(U) lies in Z_{f(q)})");
}

}  // namespace slicepow

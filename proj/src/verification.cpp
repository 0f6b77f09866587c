#include "slicepow/verification.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "slicepow/error.hpp"
#include "slicepow/power_map.hpp"

namespace slicepow {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

cplx Sampler::complex_in_box(double r) { return {uniform(-r, r), uniform(-r, r)}; }

CQuat Sampler::cquat(double r) {
  return {complex_in_box(r), complex_in_box(r), complex_in_box(r), complex_in_box(r)};
}

CQuat Sampler::omega_k_point(int k, double r) {
  for (;;) {
    const CQuat w = cquat(r);
    if (classify_stratum(w, k, 1e-6).tag == StratumTag::OMEGA_K) return w;
  }
}

CQuat Sampler::omega_point(double r) {
  for (;;) {
    const CQuat w = cquat(r);
    if (in_omega(w, 1e-6)) return w;
  }
}

ImUnit Sampler::im_unit() {
  for (;;) {
    const Quaternion v{0.0, uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
    if (v.norm() > 0.1) return ImUnit::from_vector(v);
  }
}

StemPoly Sampler::real_stem(int deg, double r) {
  std::vector<Quaternion> c;
  for (int n = 0; n <= deg; ++n) c.push_back({uniform(-r, r), uniform(-r, r), uniform(-r, r), uniform(-r, r)});
  return StemPoly::from_quaternion_coeffs(c);
}

namespace {

// Difference quotient on n > k complex nodes w + r e^{2 pi i m / n} e_j.
// sigma_k is a polynomial of degree k along every line, so the quotient
// carries no truncation error; what is left is roundoff of order
// eps |sigma_k| / r.
Eigen::Matrix4cd fd_jacobian(const CQuat& w, int k) {
  const double r = 0.25 * (1.0 + w.max_abs());
  const int n = k + 2;
  Eigen::Matrix4cd J = Eigen::Matrix4cd::Zero();
  for (int j = 0; j < 4; ++j)
    for (int m = 0; m < n; ++m) {
      const cplx node = std::polar(1.0, 2.0 * std::numbers::pi * m / n);
      CQuat p = w;
      p[j] += r * node;
      const CQuat f = sigma_k(p, k);
      for (int i = 0; i < 4; ++i) J(i, j) += f[i] / (node * r * static_cast<double>(n));
    }
  return J;
}

}  // namespace

cplx fd_jacobian_det(const CQuat& w, int k) { return fd_jacobian(w, k).determinant(); }

namespace {

CheckResult finish(std::string name, double measured, double tol, std::string detail = {}) {
  return {std::move(name), measured <= tol, measured, tol, std::move(detail)};
}

}  // namespace

CheckResult check_pell_identity(Sampler& s, int samples) {
  double worst = 0.0;
  for (int k = 1; k <= 20; ++k)
    for (int i = 0; i < samples; ++i) {
      const cplx x = s.complex_in_box(), y = s.complex_in_box();
      const auto [p0, p1] = p_pair(k, x, y * y);
      const cplx lhs = p0 * p0 + y * y * p1 * p1;
      const cplx rhs = std::pow(x * x + y * y, k);
      const double scale = std::pow(std::abs(x) + std::abs(y), 2 * k);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(scale, 1e-300));
    }
  return finish("pell_modulus_identity", worst, 1e-10, "k = 1..20, relative to (|x| + |y|)^(2k)");
}

CheckResult check_jacobian(Sampler& s, int samples) {
  double worst = 0.0;
  for (int k = 2; k <= 8; ++k)
    for (int i = 0; i < samples; ++i) {
      const CQuat w = s.omega_k_point(k);
      const cplx exact = sigma_k_jacobian_det(w, k);
      worst = std::max(worst, std::abs(fd_jacobian_det(w, k) - exact) / std::abs(exact));
    }
  const std::string d = "k = 2..8, difference quotient vs k^2 (N^2)^(k-1) p1^2";
  return finish("jacobian_determinant", worst, 1e-4, d);
}

CheckResult check_covering(Sampler& s, int samples) {
  double worst = 0.0;
  int bad_count = 0, outside = 0;
  for (int k = 2; k <= 6; ++k)
    for (int i = 0; i < samples; ++i) {
      const CQuat w = s.omega_point();
      const auto br = point_star_roots(w, k);
      if (br.size() != static_cast<std::size_t>(k * k)) ++bad_count;
      const double sep = 1e-8 * std::max(1.0, std::pow(w.max_abs(), 1.0 / k));
      for (std::size_t a = 0; a < br.size(); ++a) {
        worst = std::max(worst, br[a].residual / (1.0 + w.max_abs()));
        if (!br[a].in_omega_k) ++outside;
        for (std::size_t b = a + 1; b < br.size(); ++b)
          if (distance(br[a].value, br[b].value) <= sep) ++bad_count;
      }
    }
  std::ostringstream d;
  d << "k = 2..6; count/distinctness failures " << bad_count << ", outputs outside Omega_k " << outside;
  CheckResult r = finish("covering_k_squared_roots", worst, 1e-9, d.str());
  r.passed = r.passed && bad_count == 0;
  return r;
}

CheckResult check_homogeneity(Sampler& s, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const int k = 1 + i % 8;
    const CQuat w = s.cquat();
    const cplx xi = s.complex_in_box();
    const CQuat lhs = sigma_k(xi * w, k);
    const CQuat rhs = std::pow(xi, k) * sigma_k(w, k);
    const double scale = std::pow(std::abs(xi) * (1.0 + w.max_abs()), k);
    worst = std::max(worst, distance(lhs, rhs) / std::max(scale, 1e-300));
  }
  return finish("k_homogeneity", worst, 1e-10);
}

CheckResult check_conjugation_equivariance(Sampler& s, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const int k = 1 + i % 8;
    const CQuat w = s.cquat();
    const double scale = std::pow(1.0 + w.max_abs(), k);
    worst = std::max(worst, distance(sigma_k(w.cconj(), k), sigma_k(w, k).cconj()) / scale);
  }
  return finish("conjugation_equivariance", worst, 1e-12);
}

std::vector<CheckResult> check_stratum_mapping(Sampler& s, int samples) {
  auto vec = [&] { return std::array<cplx, 3>{s.complex_in_box(), s.complex_in_box(), s.complex_in_box()}; };
  auto make = [](cplx z0, const std::array<cplx, 3>& v) { return CQuat{z0, v[0], v[1], v[2]}; };
  auto vsq = [](const std::array<cplx, 3>& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; };
  auto vector_max = [](const CQuat& w) {
    return std::max({std::abs(w[1]), std::abs(w[2]), std::abs(w[3])});
  };
  double vm1 = 0, v0odd = 0, v0even = 0, vinf = 0, vrsq = 0;
  for (int i = 0; i < samples; ++i) {
    const int k = 2 + i % 5;                    // 2..6
    const int kodd = 3 + 2 * (i % 3);           // 3, 5, 7
    const int keven = 2 + 2 * (i % 3);          // 2, 4, 6
    const int kr = 3 + i % 6;                   // 3..8, R_k non-empty

    auto v = vec();
    CQuat w = make(cplx(0, 1) * std::sqrt(vsq(v)), v);  // N^2 = 0
    vm1 = std::max(vm1, std::abs(sigma_k(w, k).norm_square()) / std::pow(1.0 + w.max_abs(), 2 * k));

    v = vec();
    w = make(0.0, v);
    v0odd = std::max(v0odd, std::abs(sigma_k(w, kodd)[0]) / std::pow(1.0 + w.max_abs(), kodd));
    v0even = std::max(v0even, vector_max(sigma_k(w, keven)) / std::pow(1.0 + w.max_abs(), keven));

    v = vec();
    v[2] = cplx(0, 1) * std::sqrt(v[0] * v[0] + v[1] * v[1]);  // z_v^2 = 0
    w = make(s.complex_in_box(), v);
    vinf = std::max(vinf, std::abs(sigma_k(w, k).vector_square()) / std::pow(1.0 + w.max_abs(), 2 * k));

    const auto rk = PowerTables(kr).positive_roots();
    const double r = rk[static_cast<std::size_t>(i) % rk.size()];
    v = vec();
    w = make((i % 2 ? r : -r) * std::sqrt(vsq(v)), v);  // z0^2 = r^2 z_v^2
    vrsq = std::max(vrsq, vector_max(sigma_k(w, kr)) / std::pow(1.0 + w.max_abs(), kr));
  }
  return {finish("stratum_V_minus1_to_V_minus1", vm1, 1e-9),
          finish("stratum_V0_to_V0_k_odd", v0odd, 1e-9),
          finish("stratum_V0_to_Vinf_k_even", v0even, 1e-9),
          finish("stratum_Vinf_to_Vinf", vinf, 1e-9),
          finish("stratum_Vrsq_to_real_axis", vrsq, 1e-9)};
}

namespace {

// Real-coefficient quartic (per component) built so that the classifier
// at (z, I) lands in a prescribed case. kind: 0 generic, 1 F1(z) = 0,
// 2 F'(z) = 0, 3 pi(F'(z), I) F1(z)^{-1} anticommutes with I.
StemPoly constructed_stem(Sampler& s, int kind, cplx z, const ImUnit& unit) {
  std::vector<Quaternion> c(5);
  for (auto& q : c) q = {s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)};
  if (kind == 1) {
    // (zeta - z)(zeta - conj z) H(zeta) + q0, H quadratic.
    const double b = -2.0 * z.real(), cc = std::norm(z);
    const Quaternion h0 = c[0], h1 = c[1], h2 = c[2], q0 = c[3];
    c[0] = cc * h0 + q0;
    c[1] = cc * h1 + b * h0;
    c[2] = cc * h2 + b * h1 + h0;
    c[3] = b * h2 + h1;
    c[4] = h2;
  } else if (kind == 2 || kind == 3) {
    Quaternion t1{}, d0{}, d1{};
    if (kind == 3) {
      const Quaternion& I = unit.value();
      Quaternion v{0.0, s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)};
      const double dot = v.q1 * I.q1 + v.q2 * I.q2 + v.q3 * I.q3;
      v = v - dot * I;
      const Quaternion j1 = (1.0 / v.norm()) * v;
      const Quaternion j2 = qmul(I, j1);
      const Quaternion a = s.uniform(0.5, 1.5) * j1 + s.uniform(-1, 1) * j2;
      t1 = {s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)};
      d1 = {s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)};
      d0 = qmul(a, t1) - qmul(I, d1);
    }
    const cplx z2 = z * z, z3 = z2 * z, z4 = z3 * z;
    for (int h = 0; h < 4; ++h) {
      const double c4 = c[4][h];
      Eigen::Matrix3d A;
      Eigen::Vector3d rhs;
      if (kind == 2) {
        // F'(z) = 0 with c3, c4 free: solve for c1, c2 (c3 kept).
        const double c3 = c[3][h];
        const cplx rest = 3.0 * c3 * z2 + 4.0 * c4 * z3;
        const double c2 = -rest.imag() / (2.0 * z.imag());
        const double c1 = -rest.real() - 2.0 * c2 * z.real();
        c[1][h] = c1;
        c[2][h] = c2;
        continue;
      }
      // Im F(z) = t1, F'(z) = d0 + ı d1, solving for c1, c2, c3.
      A << z.imag(), z2.imag(), z3.imag(), 1.0, 2.0 * z.real(), 3.0 * z2.real(), 0.0, 2.0 * z.imag(),
          3.0 * z2.imag();
      rhs << t1[h] - c4 * z4.imag(), d0[h] - 4.0 * c4 * z3.real(), d1[h] - 4.0 * c4 * z3.imag();
      const Eigen::Vector3d sol = A.colPivHouseholderQr().solve(rhs);
      c[1][h] = sol(0);
      c[2][h] = sol(1);
      c[3][h] = sol(2);
    }
  }
  return StemPoly::from_quaternion_coeffs(c);
}

}  // namespace

CheckResult check_classifier_equivalence(Sampler& s, int samples) {
  int mismatches = 0;
  int singular = 0;
  for (int i = 0; i < samples; ++i) {
    const cplx z{s.uniform(-1, 1), s.uniform(0.2, 1.2)};
    const ImUnit unit = s.im_unit();
    const StemPoly F = constructed_stem(s, i % 4, z, unit);
    const bool sing = classify_differential(F, z, unit) != SingularityVerdict::NONSINGULAR;
    int mult;
    try {
      mult = phi_multiplicity(F, z, unit);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IdenticallyZero) throw;
      mult = 1 << 20;
    }
    if (sing) ++singular;
    if (sing != (mult >= 2)) ++mismatches;
  }
  std::ostringstream d;
  d << samples << " stems of degree <= 4, " << singular << " singular by construction or chance";
  return finish("classifier_equivalence", mismatches, 0.0, d.str());
}

CheckResult check_q_root_counts() {
  int bad = 0;
  double worst = 0.0;
  for (int k = 2; k <= 20; ++k) {
    const PowerTables t(k);
    if (static_cast<int>(t.positive_roots().size()) != (k - 1) / 2) ++bad;
    if (static_cast<int>(t.q_roots().size()) != k - 1) ++bad;
    for (const double r : t.q_roots()) {
      // Q^k is of size |r + ı|^(k-1) near r; residual measured on that scale.
      const double scale = std::pow(1.0 + r * r, 0.5 * (k - 1));
      worst = std::max(worst, std::abs(q_poly(k, r)) / scale);
    }
  }
  CheckResult res = finish("q_root_counts", worst, 1e-10,
                           "k = 2..20; |R_k| = floor((k-1)/2), residual relative to |r + i|^(k-1)");
  res.passed = res.passed && bad == 0;
  return res;
}

CheckResult check_group_tables() {
  int failed = 0;
  for (int k = 1; k <= 8; ++k)
    if (!verify_group_table(k).passed()) ++failed;
  return finish("group_tables", failed, 0.0, "k = 1..8");
}

CheckResult check_symmetrization_reality(Sampler& s, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const StemPoly F = s.real_stem(1 + i % 4);
    const StemPoly S = symmetrization(F);
    const double scale = std::max(1.0, F.max_coeff() * F.max_coeff());
    for (const auto& c : S.coeffs())
      for (int h = 1; h < 4; ++h) worst = std::max(worst, std::abs(c[h]) / scale);
  }
  return finish("symmetrization_slice_preserving", worst, 1e-12);
}

CheckResult check_star_power_consistency(Sampler& s, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const int k = 1 + i % 5;
    const StemPoly F = s.real_stem(1 + i % 3);
    const StemPoly P = star_power(F, k);
    const cplx z = s.complex_in_box(1.5);
    const CQuat direct = sigma_k(F(z), k);
    const double scale = std::pow(1.0 + F(z).max_abs(), k);
    worst = std::max(worst, distance(P(z), direct) / scale);
  }
  return finish("star_power_vs_sigma_k", worst, 1e-10);
}

std::vector<CheckResult> run_invariant_suite(const VerifyOptions& opt) {
  Sampler s(opt.seed);
  const int n = opt.samples;
  std::vector<CheckResult> out;
  out.push_back(check_pell_identity(s, n));
  out.push_back(check_jacobian(s, std::max(1, n / 10)));
  out.push_back(check_covering(s, n));
  out.push_back(check_homogeneity(s, n));
  out.push_back(check_conjugation_equivariance(s, n));
  for (auto& r : check_stratum_mapping(s, n)) out.push_back(std::move(r));
  out.push_back(check_classifier_equivalence(s, n));
  out.push_back(check_q_root_counts());
  out.push_back(check_group_tables());
  out.push_back(check_symmetrization_reality(s, n));
  out.push_back(check_star_power_consistency(s, n));
  return out;
}

}  // namespace slicepow

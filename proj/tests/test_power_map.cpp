#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "slicepow/power_map.hpp"
#include "slicepow/verification.hpp"

using namespace slicepow;
using namespace std::complex_literals;

TEST_CASE("p_pair examples") {
  const cplx z{0.7, -1.3};
  const auto [p0, p1] = p_pair(3, z, 1.0);
  CHECK(std::abs(p0 - (z * z * z - 3.0 * z)) <= 1e-14);
  CHECK(std::abs(p1 - (3.0 * z * z - 1.0)) <= 1e-14);

  const auto [q0, q1] = p_pair(1, z, 5.0 + 2i);
  CHECK(q0 == z);
  CHECK(q1 == cplx(1.0));

  // (2 + I sqrt 3)^5
  const auto [r0, r1] = p_pair(5, 2.0, 3.0);
  const auto [b0, b1] = oracle::binomial_pair(5, 2.0, std::sqrt(3.0));
  CHECK(std::abs(r0 - b0) <= 1e-12);
  CHECK(std::abs(r1 - b1) <= 1e-12);
}

TEST_CASE("p_pair matches binomial expansion on random complex data") {
  oracle::Rng rng(31);
  for (int i = 0; i < 2000; ++i) {
    const int k = 1 + i % 12;
    const cplx x = rng.complex(), y = rng.complex();
    const auto [p0, p1] = p_pair(k, x, y * y);
    const auto [b0, b1] = oracle::binomial_pair(k, x, y);
    const double scale = std::pow(std::abs(x) + std::abs(y), k);
    CHECK(std::abs(p0 - b0) <= 1e-12 * scale);
    CHECK(std::abs(y * (p1 - b1)) <= 1e-12 * scale);
  }
}

TEST_CASE("p_pair matches the Chebyshev closed forms on real points") {
  oracle::Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    const int k = 1 + i % 15;
    const double x = rng.uniform(-2, 2), ysq = rng.uniform(0.01, 3);
    const auto [p0, p1] = p_pair(k, x, ysq);
    const auto [c0, c1] = oracle::chebyshev_pair(k, x, ysq);
    const double n = std::pow(x * x + ysq, 0.5 * k);
    CHECK(std::abs(p0.real() - c0) <= 1e-9 * n);
    CHECK(std::abs(p1.real() - c1) <= 1e-9 * k * n / std::sqrt(x * x + ysq));
  }
}

TEST_CASE("Pell form of the modulus identity") {
  oracle::Rng rng(33);
  for (int k = 1; k <= 20; ++k)
    for (int i = 0; i < 200; ++i) {
      const cplx x = rng.complex(), y = rng.complex();
      const auto [p0, p1] = p_pair(k, x, y * y);
      const cplx lhs = p0 * p0 + y * y * p1 * p1;
      const cplx rhs = std::pow(x * x + y * y, k);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::pow(std::abs(x) + std::abs(y), 2 * k));
    }
}

TEST_CASE("sigma_k examples") {
  const cplx z{1.5, 0.25};
  const CQuat f = sigma_k(CQuat{z, 1.0, 0.0, 0.0}, 3);
  CHECK(oracle::dist(f, CQuat{z * z * z - 3.0 * z, 3.0 * z * z - 1.0, 0.0, 0.0}) <= 1e-13);

  const Quaternion q{0.5, -1, 2, 0.25};
  for (int k = 1; k <= 6; ++k) {
    const Quaternion direct = oracle::qpower(q, k);
    CHECK(oracle::dist(sigma_k(CQuat::from_real(q), k), CQuat::from_real(direct)) <= 1e-12 * std::pow(q.norm(), k));
  }

  const double h = std::sqrt(2.0) / 2;
  const CQuat g1{h * 1i, h * 1i * z, h * 1i * z, -h * 1i};
  CHECK(oracle::dist(sigma_k(g1, 2), CQuat{z * z, -z, -z, 1.0}) <= 1e-14);
}

TEST_CASE("sigma_k equals repeated multiplication") {
  oracle::Rng rng(34);
  for (int i = 0; i < 2000; ++i) {
    const int k = 1 + i % 10;
    const CQuat w = rng.cquat();
    CHECK(oracle::dist(sigma_k(w, k), oracle::power(w, k)) <= 1e-12 * std::pow(1 + oracle::max_abs(w), k));
  }
}

TEST_CASE("homogeneity and conjugation equivariance") {
  oracle::Rng rng(35);
  for (int i = 0; i < 1000; ++i) {
    const int k = 1 + i % 8;
    const CQuat w = rng.cquat();
    const cplx xi = rng.complex();
    const double scale = std::pow(std::abs(xi) * (1 + oracle::max_abs(w)), k);
    CHECK(oracle::dist(sigma_k(xi * w, k), std::pow(xi, k) * sigma_k(w, k)) <= 1e-10 * scale);
    CHECK(oracle::dist(sigma_k(w.cconj(), k), sigma_k(w, k).cconj()) <= 1e-12 * std::pow(1 + oracle::max_abs(w), k));
  }
}

TEST_CASE("Jacobian determinant examples") {
  CHECK(std::abs(sigma_k_jacobian_det(CQuat{1.0, 0.0, 0.0, 0.0}, 2) - 16.0) <= 1e-14);
  CHECK(std::abs(fd_jacobian_det(CQuat{1.0, 0.0, 0.0, 0.0}, 2) - 16.0) <= 1e-10);
  CHECK(std::abs(sigma_k_jacobian_det(CQuat{1i, 1.0, 0.0, 0.0}, 2)) <= 1e-15);
  // z0 = cot(pi/3) z_v makes p1^2(z0, z_v^2) = 3 z0^2 - z_v^2 vanish
  const double r = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(sigma_k_jacobian_det(CQuat{r * 1.5, 1.5, 0.0, 0.0}, 3)) <= 1e-13);
}

TEST_CASE("Jacobian determinant against finite differences") {
  Sampler s(36);
  for (int k = 2; k <= 8; ++k)
    for (int i = 0; i < 100; ++i) {
      const CQuat w = s.omega_k_point(k);
      const cplx exact = sigma_k_jacobian_det(w, k);
      const cplx fd = fd_jacobian_det(w, k);
      CHECK(std::abs(fd - exact) <= 1e-4 * std::abs(exact));
    }
}

TEST_CASE("the exponent of N^2 in the Jacobian is k - 1") {
  // k^2 N^2 [p1]^2 is only right for k = 2; at k = 3 it is off by the
  // factor N^2, which a single generic point already shows.
  const CQuat w{0.8 + 0.1i, 0.3 - 0.2i, -0.5i, 0.4};
  for (int k = 2; k <= 5; ++k) {
    const cplx p1 = p_pair(k, w[0], w.vector_square()).second;
    const cplx short_form = static_cast<double>(k * k) * w.norm_square() * p1 * p1;
    const cplx fd = fd_jacobian_det(w, k);
    CHECK(std::abs(fd - sigma_k_jacobian_det(w, k)) <= 1e-9 * std::abs(fd));
    if (k == 2) CHECK(std::abs(fd - short_form) <= 1e-9 * std::abs(fd));
    else CHECK(std::abs(fd - short_form) > 1e-2 * std::abs(fd));
  }
}

TEST_CASE("q_poly_roots") {
  const auto r2 = q_poly_roots(2);
  REQUIRE(r2.size() == 1);
  CHECK(std::abs(r2[0]) <= 1e-15);

  const auto r3 = q_poly_roots(3);
  REQUIRE(r3.size() == 2);
  CHECK(std::abs(r3[0] + 1 / std::sqrt(3.0)) <= 1e-15);
  CHECK(std::abs(r3[1] - 1 / std::sqrt(3.0)) <= 1e-15);
  CHECK(std::abs(r3[1] - 1 / std::tan(std::numbers::pi / 3)) <= 1e-15);

  const auto r5 = q_poly_roots(5);
  REQUIRE(r5.size() == 4);
  for (int n = 1; n <= 4; ++n) {
    const double cot = 1 / std::tan(n * std::numbers::pi / 5);
    CHECK(std::abs(r5[static_cast<std::size_t>(4 - n)] - cot) <= 1e-14);
  }
  for (std::size_t i = 0; i + 1 < r5.size(); ++i) CHECK(r5[i] < r5[i + 1]);
}

TEST_CASE("Q^k is the imaginary part of (t + ı)^k and R_k has floor((k-1)/2) members") {
  for (int k = 2; k <= 20; ++k) {
    const PowerTables tab(k);
    CHECK(tab.q_roots().size() == static_cast<std::size_t>(k - 1));
    CHECK(tab.positive_roots().size() == static_cast<std::size_t>((k - 1) / 2));
    for (const double r : tab.q_roots()) {
      const double scale = std::pow(std::abs(cplx(r, 1.0)), k - 1);
      CHECK(std::abs(q_poly(k, r)) <= 1e-10 * scale);
      CHECK(std::abs(std::pow(cplx(r, 1.0), k).imag()) <= 1e-10 * scale * std::abs(cplx(r, 1.0)));
    }
    for (const double r : tab.positive_roots()) CHECK(r > 0.0);
  }
  const cplx t{0.3, -0.7};
  for (int k = 1; k <= 9; ++k) {
    // Im((t + ı)^k) continued holomorphically: ((t + ı)^k - (t - ı)^k) / 2ı
    const cplx expected = (std::pow(t + 1i, k) - std::pow(t - 1i, k)) / 2i;
    CHECK(std::abs(q_poly(k, t) - expected) <= 1e-12);
  }
}

// Acceptance run: one PASS/FAIL line per criterion with its measured
// residuals and wall time against the budget. A criterion that cannot hold
// as stated is reported as "FAIL (expected: ...)" and does not change the
// exit status; any other failure does.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "slicepow/continuation.hpp"
#include "slicepow/error.hpp"
#include "slicepow/power_map.hpp"
#include "slicepow/verification.hpp"

using namespace slicepow;
using namespace std::complex_literals;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  std::string expected_failure;  // non-empty: known to be unattainable as stated
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Verdict()> body;
};

std::string sci(double x) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << x;
  return s.str();
}

const Quaternion kOne{1, 0, 0, 0}, kI{0, 1, 0, 0}, kJ{0, 0, 1, 0};
const double kR3 = std::sqrt(3.0), kH = std::sqrt(2.0) / 2;

// Closed forms of the two worked examples.
CQuat g_cubic(int m, cplx z) {
  switch (m) {
    case 0: return {z, 1.0, 0.0, 0.0};
    case 1: return {-z / 2.0 - kR3 / 2, kR3 * z / 2.0 - 0.5, 0.0, 0.0};
    default: return {-z / 2.0 + kR3 / 2, -kR3 * z / 2.0 - 0.5, 0.0, 0.0};
  }
}
CQuat G_quad(int m, cplx z) {
  const cplx r = std::sqrt(4.0 * z * z + 2.0);
  switch (m) {
    case 1: return {kH * 1i, kH * 1i * z, kH * 1i * z, -kH * 1i};
    case 2: return -G_quad(1, z);
    case 3: return {r / 2.0, -z / r, -z / r, 1.0 / r};
    default: return -G_quad(3, z);
  }
}

double path_deviation(const GlobalRoot& g, const std::function<CQuat(std::size_t, cplx)>& expected) {
  double d = 0.0;
  for (std::size_t i = 0; i < g.points.size(); ++i) d = std::max(d, oracle::dist(g.values[i], expected(i, g.points[i])));
  return d;
}

// Criterion 1 --------------------------------------------------------------

Verdict cubic_example() {
  Verdict v;
  std::ostringstream d;
  const StemPoly g0 = StemPoly::from_quaternion_coeffs({kI, kOne});
  const StemPoly F = star_power(g0, 3);
  const StemPoly expected = StemPoly::from_components({0.0, -3.0, 0.0, 1.0}, {-1.0, 0.0, 3.0}, {}, {});
  double coeff_err = F.coeffs().size() == expected.coeffs().size() ? 0.0 : 1e300;
  for (std::size_t n = 0; n < std::min(F.coeffs().size(), expected.coeffs().size()); ++n)
    coeff_err = std::max(coeff_err, oracle::dist(F.coeffs()[n], expected.coeffs()[n]));
  v.pass = v.pass && coeff_err <= 1e-12;
  d << "star_power coeff err " << sci(coeff_err);

  // three real-anchored roots on a symmetric V through x0 = 0
  const DomainPath vpath = DomainPath::symmetric_v(0.0, 0.4, 10);
  const auto roots = global_roots_with_real(stem_fn(F), vpath, 3);
  double real_err = 0.0;
  std::vector<int> seen;
  for (const auto& r : roots) {
    double best = 1e300;
    int which = -1;
    for (int m = 0; m < 3; ++m)
      if (const double e = path_deviation(r, [m](std::size_t, cplx z) { return g_cubic(m, z); }); e < best) {
        best = e;
        which = m;
      }
    real_err = std::max(real_err, best);
    seen.push_back(which);
  }
  std::sort(seen.begin(), seen.end());
  const bool real_ok = roots.size() == 3 && seen == std::vector<int>{0, 1, 2} && real_err <= 1e-9;
  v.pass = v.pass && real_ok;
  d << "; with real: " << roots.size() << " roots on " << vpath.points.size() << " samples, err " << sci(real_err);

  // nine roots on an upper half-plane segment, against xi^a G_m / conj(xi)^a G_m
  const DomainPath upper = DomainPath::segment(-1.0 + 0.5i, 1.0 + 0.5i, 20);
  const std::size_t nu = upper.points.size();
  const auto nine = global_roots_no_real(stem_fn(F), upper, 3);
  const cplx xi = std::polar(1.0, 2 * std::numbers::pi / 3);
  double table_err = 0.0, twisted_err = 0.0;
  std::vector<int> cells;
  const StemPoly J = j_function();
  for (const auto& r : nine) {
    double best = 1e300;
    int cell = -1;
    for (int a = 0; a < 3; ++a)
      for (int m = 0; m < 3; ++m) {
        const double e = path_deviation(r, [&](std::size_t i, cplx z) {
          return (i < nu ? std::pow(xi, a) : std::pow(std::conj(xi), a)) * g_cubic(m, z);
        });
        if (e < best) {
          best = e;
          cell = 3 * a + m;
        }
      }
    table_err = std::max(table_err, best);
    cells.push_back(cell);
    // the same root in its J-twisted form (-1/2 + J sqrt3/2)^a g_m
    const int a = cell / 3, m = cell % 3;
    StemPoly twist = StemPoly::constant(CQuat{1.0, 0.0, 0.0, 0.0}, StemDomain::UPPER_ONLY);
    const StemPoly eta = cplx(-0.5) * StemPoly::constant(CQuat{1.0, 0.0, 0.0, 0.0}, StemDomain::UPPER_ONLY) + cplx(kR3 / 2) * J;
    for (int t = 0; t < a; ++t) twist = star_product(twist, eta);
    const StemPoly gm = StemPoly::from_quaternion_coeffs(
        m == 0 ? std::vector<Quaternion>{kI, kOne}
               : m == 1 ? std::vector<Quaternion>{Quaternion{-kR3 / 2, -0.5, 0, 0}, Quaternion{-0.5, kR3 / 2, 0, 0}}
                        : std::vector<Quaternion>{Quaternion{kR3 / 2, -0.5, 0, 0}, Quaternion{-0.5, -kR3 / 2, 0, 0}});
    const StemPoly form = star_product(twist, gm);
    twisted_err = std::max(twisted_err, path_deviation(r, [&](std::size_t, cplx z) { return form(z); }));
  }
  std::sort(cells.begin(), cells.end());
  const bool all_cells = std::adjacent_find(cells.begin(), cells.end()) == cells.end() && cells.size() == 9;
  v.pass = v.pass && nine.size() == 9 && all_cells && table_err <= 1e-8 && twisted_err <= 1e-8;
  d << "; without real: " << nine.size() << " roots, " << (all_cells ? "all 9 table cells" : "table cells missing")
    << ", err " << sci(table_err) << ", J-twisted err " << sci(twisted_err);
  v.detail = d.str();
  return v;
}

// Criterion 2 --------------------------------------------------------------

Verdict quadratic_example() {
  Verdict v;
  std::ostringstream d;
  const StemPoly F = star_product(StemPoly::from_quaternion_coeffs({-1.0 * kI, kOne}),
                                  StemPoly::from_quaternion_coeffs({-1.0 * kJ, kOne}));
  const bool exact = F.coeffs().size() == 3 && F.coeffs()[0] == CQuat{0.0, 0.0, 0.0, 1.0} &&
                     F.coeffs()[1] == CQuat{0.0, -1.0, -1.0, 0.0} && F.coeffs()[2] == CQuat{1.0, 0.0, 0.0, 0.0};
  v.pass = exact;
  d << "star_product " << (exact ? "exact" : "MISMATCH");

  const cplx z = 2.0;
  const auto br = point_star_roots(F(z), 2);
  double err = 0.0;
  std::vector<std::size_t> used;
  for (int m = 1; m <= 4; ++m) {
    double best = 1e300;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < br.size(); ++i)
      if (const double e = oracle::dist(br[i].value, G_quad(m, z)); e < best) {
        best = e;
        idx = i;
      }
    err = std::max(err, best);
    used.push_back(idx);
  }
  std::sort(used.begin(), used.end());
  const bool bij = br.size() == 4 && std::adjacent_find(used.begin(), used.end()) == used.end();
  v.pass = v.pass && bij && err <= 1e-9;
  d << "; z = 2: " << br.size() << " branches, G1..G4 err " << sci(err);

  const DomainPath loop = DomainPath::circle(1i / std::sqrt(2.0), 0.15, 64);
  const cplx base = loop.points.front();
  const Permutation p = monodromy_of_loop(stem_fn(F), loop, 2);
  const auto at_base = point_star_roots(F(base), 2);
  int two_cycles = 0, fixed_constant = 0, swapped_radical = 0;
  for (const auto& c : p.cycles()) two_cycles += c.size() == 2;
  for (std::size_t i = 0; i < at_base.size(); ++i) {
    const CQuat val = at_base[i].value;
    const bool constant = std::min(oracle::dist(val, G_quad(1, base)), oracle::dist(val, G_quad(2, base))) <= 1e-9;
    const bool radical = std::min(oracle::dist(val, G_quad(3, base)), oracle::dist(val, G_quad(4, base))) <= 1e-9;
    const std::size_t j = static_cast<std::size_t>(p.image[i]);
    if (constant && j == i) ++fixed_constant;
    if (radical && j != i && oracle::dist(at_base[j].value, -val) <= 1e-9) ++swapped_radical;
  }
  const bool mono_ok = two_cycles == 1 && fixed_constant == 2 && swapped_radical == 2;
  v.pass = v.pass && mono_ok;
  d << "; loop around i/sqrt2: " << two_cycles << " two-cycle, constant pair fixed " << fixed_constant
    << "/2, +-sqrt(4z^2+2) pair swapped " << swapped_radical << "/2";
  v.detail = d.str();
  return v;
}

// Criterion 3 --------------------------------------------------------------

Verdict jacobian() {
  Verdict v;
  Sampler s(20240917);
  double literal = 0.0, corrected = 0.0;
  int literal_bad_k = 0;
  for (int k = 2; k <= 8; ++k) {
    double lk = 0.0;
    for (int i = 0; i < 100; ++i) {
      const CQuat w = s.omega_k_point(k);
      const cplx fd = fd_jacobian_det(w, k);
      const cplx p1 = p_pair(k, w[0], w.vector_square()).second;
      const cplx stated = static_cast<double>(k * k) * w.norm_square() * p1 * p1;
      lk = std::max(lk, std::abs(fd - stated) / std::abs(stated));
      corrected = std::max(corrected, std::abs(fd - sigma_k_jacobian_det(w, k)) / std::abs(sigma_k_jacobian_det(w, k)));
    }
    literal = std::max(literal, lk);
    if (lk > 1e-4) ++literal_bad_k;
  }
  v.pass = literal <= 1e-4;
  std::ostringstream d;
  d << "k^2 N^2 p1^2 rel err " << sci(literal) << " (fails for " << literal_bad_k << " of 7 k)"
    << "; k^2 (N^2)^(k-1) p1^2 rel err " << sci(corrected) << (corrected <= 1e-4 ? " PASS" : " FAIL");
  v.detail = d.str();
  if (!v.pass && corrected <= 1e-4)
    v.expected_failure = "the stated determinant drops the power of N^2; it holds only for k = 2";
  return v;
}

// Criterion 4 --------------------------------------------------------------

Verdict covering() {
  Verdict v;
  Sampler s(4);
  int count_fail = 0, distinct_fail = 0, outside = 0;
  double worst = 0.0;
  for (int k = 2; k <= 6; ++k)
    for (int i = 0; i < 1000; ++i) {
      const CQuat w = s.omega_point();
      const auto br = point_star_roots(w, k);
      if (br.size() != static_cast<std::size_t>(k * k)) ++count_fail;
      const double sep = 1e-8 * std::max(1.0, std::pow(oracle::max_abs(w), 1.0 / k));
      for (std::size_t a = 0; a < br.size(); ++a) {
        worst = std::max(worst, oracle::dist(oracle::power(br[a].value, k), w) / (1 + oracle::max_abs(w)));
        outside += !br[a].in_omega_k;
        for (std::size_t b = a + 1; b < br.size(); ++b) distinct_fail += oracle::dist(br[a].value, br[b].value) <= sep;
      }
    }
  v.pass = count_fail == 0 && distinct_fail == 0 && worst <= 1e-9;
  std::ostringstream d;
  d << "5000 targets; wrong counts " << count_fail << ", coincident pairs " << distinct_fail
    << ", worst residual/(1+|w|) " << sci(worst) << ", outputs outside Omega_k " << outside;
  v.detail = d.str();
  return v;
}

// Criterion 5 --------------------------------------------------------------

bool valid_on(const StemPoly& F, const DomainPath& path) {
  for (const cplx z : path.points)
    if (classify_stratum(F(z), 1, 1e-6).tag == StratumTag::V_MINUS1 || !in_omega(F(z), 1e-6)) return false;
  return true;
}

Verdict root_counts() {
  Verdict v;
  Sampler s(5);
  const DomainPath vpath = DomainPath::symmetric_v(0.0, 0.3, 12);
  const DomainPath upper = DomainPath::segment(-0.3 + 0.1i, 0.3 + 0.3i, 12);
  DomainPath lower;
  for (const cplx z : upper.points) lower.points.push_back(std::conj(z));
  int cases = 0, bad = 0, rejected = 0;
  double worst = 0.0;
  std::ostringstream fails;
  for (int k = 2; k <= 5; ++k) {
    int done = 0;
    while (done < 10) {
      const StemPoly F = s.real_stem(3);
      // admissible stems are decided before any root is computed
      if (!valid_on(F, vpath) || !valid_on(F, upper) || !valid_on(F, lower)) {
        ++rejected;
        continue;
      }
      ++done;
      ++cases;
      const StemFn f = stem_fn(F);
      try {
        const auto with = global_roots_with_real(f, vpath, k);
        bool ok = with.size() == static_cast<std::size_t>(k);
        for (const auto& g : with) {
          ok = ok && g.t_class == 0;
          worst = std::max(worst, max_residual(g, f, k));
        }

        const auto nr = no_real_construction(f, upper, k);
        ok = ok && nr.roots.size() == static_cast<std::size_t>(k * k) && nr.tau_involutive;
        for (const auto& g : nr.roots) worst = std::max(worst, max_residual(g, f, k));

        const auto lifts = all_lifts(f, vpath, k);
        int fixed = 0;
        std::vector<GlobalRoot> corrected;
        bool all_zero = true;
        for (const auto& g : lifts) {
          const auto c = t_class(g, k);
          if (!c) {
            all_zero = false;
            continue;
          }
          fixed += *c == 0;
          const GlobalRoot h = apply_aut(s_correction(*c, k), g, k);
          all_zero = all_zero && t_class(h, k) == 0;
          if (match_root(h, corrected) < 0) corrected.push_back(h);
        }
        if (k % 2 == 1) ok = ok && fixed == k;
        else ok = ok && all_zero && static_cast<int>(corrected.size()) == k;
        ok = ok && worst <= 1e-8;
        if (!ok) {
          ++bad;
          fails << " k=" << k << ":fixed " << fixed << ",corrected " << corrected.size();
        }
      } catch (const Error& e) {
        ++bad;
        fails << " k=" << k << ":" << to_string(e.kind());
      }
    }
  }
  v.pass = bad == 0;
  std::ostringstream d;
  d << cases << " (stem, k) cases, k = 2..5: k real-anchored roots all T-fixed, k^2 roots off the real axis with tau "
    << "an involution, k T-fixed lifts (odd) / k after S-correction (even); failures " << bad << fails.str()
    << "; worst residual " << sci(worst) << "; stems rejected a priori for meeting a stratum " << rejected;
  v.detail = d.str();
  return v;
}

// Criterion 6 --------------------------------------------------------------

Verdict groups() {
  Verdict v;
  std::ostringstream d;
  int failed = 0;
  for (int k = 2; k <= 8; ++k) {
    const GroupTableReport r = verify_group_table(k);
    const bool ok = r.passed() && r.order == k * k && r.kernel_size == (k % 2 ? 1 : 2) && r.zk_zk && r.s_squared_ok;
    failed += !ok;
  }
  d << "group tables k = 2..8: " << (7 - failed) << "/7 pass";
  const StemPoly F = StemPoly::from_quaternion_coeffs(
      {Quaternion{0.3, 1.0, -0.5, 0.2}, Quaternion{1.0, 0.2, 0.4, -0.1}, Quaternion{0.5, 0.0, 0.3, 0.6}});
  int dihedral_ok = 0;
  for (int k = 2; k <= 4; ++k) {
    const auto lifts = all_lifts(stem_fn(F), DomainPath::symmetric_v(0.0, 0.3, 10), k);
    dihedral_ok += lifts.size() == static_cast<std::size_t>(k * k) && dihedral_check(lifts, k).passed();
  }
  d << "; T xi T = xi^-1 on lifts for k = 2..4: " << dihedral_ok << "/3";
  v.pass = failed == 0 && dihedral_ok == 3;
  v.detail = d.str();
  return v;
}

// Criterion 7 --------------------------------------------------------------

Verdict invariants() {
  Verdict v;
  Sampler s(7);
  std::vector<CheckResult> checks;
  checks.push_back(check_pell_identity(s, 1000));
  for (auto& c : check_stratum_mapping(s, 1000)) checks.push_back(c);
  checks.push_back(check_classifier_equivalence(s, 1000));
  checks.push_back(check_q_root_counts());
  std::ostringstream d;
  int passed = 0;
  for (const auto& c : checks) {
    passed += c.passed;
    if (!c.passed) d << c.name << " FAIL " << sci(c.measured) << "; ";
  }
  v.pass = passed == static_cast<int>(checks.size());
  d << passed << "/" << checks.size() << " checks (Pell, 5 stratum images, classifier equivalence, |R_k|)";
  v.detail = d.str();
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cubic example reproduction", 1.0, cubic_example},
      {2, "quadratic example reproduction", 1.0, quadratic_example},
      {3, "Jacobian determinant formula", 10.0, jacobian},
      {4, "k^2-to-1 covering", 30.0, covering},
      {5, "root-count dichotomy", 60.0, root_counts},
      {6, "group structure", 5.0, groups},
      {7, "Pell, strata, classifier, Q^k roots", 30.0, invariants},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict r;
    try {
      r = c.body();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool ok = r.pass && in_time;
    std::string status = ok ? "PASS" : "FAIL";
    if (!ok && in_time && !r.expected_failure.empty()) status += " (expected: " + r.expected_failure + ")";
    else if (!ok) ++unexpected;
    std::cout << "criterion " << c.id << ": " << status << " | " << c.name << " | " << r.detail << " | "
              << std::fixed << std::setprecision(3) << secs << " s (budget " << std::setprecision(0) << c.budget_s
              << " s)" << std::defaultfloat << '\n';
  }
  return unexpected == 0 ? 0 : 1;
}

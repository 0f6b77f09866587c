#pragma once

// Runtime invariant suite behind `slicepow verify`: randomized checks of the
// algebraic identities the library relies on, each reporting the worst
// measured deviation against its tolerance.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "slicepow/continuation.hpp"

namespace slicepow {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst deviation seen (or failure count)
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240917;
  int samples = 1000;
};

/// Seeded source of random test data.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  cplx complex_in_box(double r = 1.0);
  CQuat cquat(double r = 1.0);
  /// Rejection-samples until classify_stratum(w, k) == OMEGA_K.
  CQuat omega_k_point(int k, double r = 1.0);
  /// Rejection-samples until in_omega(w).
  CQuat omega_point(double r = 1.0);
  ImUnit im_unit();
  /// Real-coefficient stem with every component of degree <= deg.
  StemPoly real_stem(int deg, double r = 1.0);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Determinant of the complex Jacobian of sigma_k at w from a difference
/// quotient on k + 2 nodes of the circle of radius (1 + |w|_inf) / 4.
cplx fd_jacobian_det(const CQuat& w, int k);

CheckResult check_pell_identity(Sampler& s, int samples);
CheckResult check_jacobian(Sampler& s, int samples);
CheckResult check_covering(Sampler& s, int samples);
CheckResult check_homogeneity(Sampler& s, int samples);
CheckResult check_conjugation_equivariance(Sampler& s, int samples);
/// The five image statements for V_{-1}, V_0 (k odd), V_0 (k even), V_inf, V_{r^2}.
std::vector<CheckResult> check_stratum_mapping(Sampler& s, int samples);
CheckResult check_classifier_equivalence(Sampler& s, int samples);
CheckResult check_q_root_counts();
CheckResult check_group_tables();
CheckResult check_symmetrization_reality(Sampler& s, int samples);
CheckResult check_star_power_consistency(Sampler& s, int samples);

std::vector<CheckResult> run_invariant_suite(const VerifyOptions& opt = {});

}  // namespace slicepow

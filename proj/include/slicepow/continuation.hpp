#pragma once

// Global k-th star-roots: lifting pointwise root branches along sampled
// paths of the stem domain, the bar involution T, and the automorphism
// group of the covering (u, s) -> (s_k(u), s) acting on lifts.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slicepow/root_solver.hpp"
#include "slicepow/slice_function.hpp"

namespace slicepow {

struct DomainPath {
  std::vector<cplx> points;
  bool closed = false;               // loops repeat the first point at the end
  std::optional<std::size_t> anchor; // index of a real sample, if any

  /// n + 1 evenly spaced points from a to b.
  static DomainPath segment(cplx a, cplx b, int n);
  /// Closed loop of n + 1 points (last == first) starting at center + radius.
  static DomainPath circle(cplx center, double radius, int n);
  /// Symmetric V through the real point x: x + h|s| + ı h s for s in [-1, 1],
  /// 2n + 1 points with the anchor in the middle.
  static DomainPath symmetric_v(double x, double h, int n);

  DomainPath reversed() const;
  /// Points followed by other's points (other's first point dropped if equal).
  DomainPath then(const DomainPath& other) const;
};

struct TrackingOptions {
  double stratum_tol = kStratumTolerance;
  double real_tol = kRealTolerance;  // anchor non-reality for quat_kth_roots
  int max_refine = 12;       // bisection depth on ambiguous steps
  double match_tol = 1e-7;   // relative, for tau, t_class and permutations
};

/// A lift G of F along a path: sigma_k(values[i]) = F(points[i]).
/// frames[i] is the unit s(z) of a continuous rho lift of F, so that every
/// value reads u0 e0 + u1 s with u0 = values[i][0].
struct GlobalRoot {
  std::string label;
  std::vector<cplx> points;
  std::vector<CQuat> values;
  std::vector<CQuat> frames;
  std::optional<int> t_class;

  /// (u0, u1) at sample i.
  std::pair<cplx, cplx> ucoords(std::size_t i) const;
};

/// Element xi^a A_{eta^b} S^delta of the automorphism group, optionally
/// followed by T. xi = eta = exp(2 pi ı / k); S = lambda A_mu with
/// lambda = mu = exp(pi ı / k), meaningful for k even.
struct MonodromyElement {
  int a = 0;
  int b = 0;
  int delta = 0;
  bool t_flag = false;
};

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<cplx, 4>;

Mat2 aut_matrix(const MonodromyElement& g, int k);

/// Continuous choice of the unit s along a point list (principal lift at
/// the first point, then the sign closest to the previous sample).
std::vector<CQuat> frame_along(const StemFn& F, const std::vector<cplx>& points,
                               double tol = kStratumTolerance);

/// Nearest-neighbour continuation of `seed` (a root of F(points[0])).
/// A step is ambiguous when the second-closest candidate is within twice
/// the distance of the closest; such steps are bisected up to max_refine
/// times before AmbiguousTracking is raised. StratumHit when F leaves Omega.
GlobalRoot lift_path(const StemFn& F, const DomainPath& path, const CQuat& seed, int k,
                     const TrackingOptions& opt = {});

/// Lift through points[start] in both directions.
GlobalRoot lift_path_from(const StemFn& F, const DomainPath& path, std::size_t start,
                          const CQuat& seed, int k, const TrackingOptions& opt = {});

/// All k^2 lifts through points[start] (default: the anchor, else 0),
/// labelled "m.n" by the pointwise branches there.
std::vector<GlobalRoot> all_lifts(const StemFn& F, const DomainPath& path, int k,
                                  std::optional<std::size_t> start = std::nullopt,
                                  const TrackingOptions& opt = {});

/// A permutation of the label-sorted branch set at a basepoint.
struct Permutation {
  std::vector<BranchLabel> labels;
  std::vector<int> image;  // labels[i] -> labels[image[i]]

  bool is_identity() const;
  std::vector<std::vector<int>> cycles() const;
  Permutation compose(const Permutation& after) const;  // after o this
};

/// Monodromy of a closed loop on the k^2 branches at loop.points[0].
/// MatchingFailure if a lifted end value matches no basepoint branch.
Permutation monodromy_of_loop(const StemFn& F, const DomainPath& loop, int k,
                              const TrackingOptions& opt = {});

/// Acts on the lift (u0, u1) by aut_matrix, keeps s. For branches t_flag
/// conjugates the result (a root of conj w); the label is kept.
RootBranch apply_aut(const MonodromyElement& g, const RootBranch& branch, int k);
/// For global roots t_flag applies t_involution (PathNotSymmetric).
GlobalRoot apply_aut(const MonodromyElement& g, const GlobalRoot& root, int k);

/// TG(z) = conj G(conj z), pairing samples z <-> conj z.
GlobalRoot t_involution(const GlobalRoot& root, double pair_tol = 1e-12);

/// Index j with points[j] = conj points[i]; PathNotSymmetric otherwise.
std::vector<std::size_t> conjugate_pairing(const std::vector<cplx>& points, double tol = 1e-12);

/// The c in {0..k-1} with G(conj z) = xi^c conj G(z), decided by majority
/// vote over sample pairs; nullopt when no c wins.
std::optional<int> t_class(const GlobalRoot& root, int k, double match_tol = 1e-7);

/// k lifts seeded by the quaternionic k-th roots of F(x0) at the real anchor.
/// AnchorNotReal, AnchorNotInOmega, plus lift errors.
std::vector<GlobalRoot> global_roots_with_real(const StemFn& F, const DomainPath& path, int k,
                                               const TrackingOptions& opt = {});

struct NoRealConstruction {
  std::vector<GlobalRoot> upper;   // k^2 lifts along the upper path
  std::vector<GlobalRoot> lower;   // k^2 lifts along its conjugate
  std::vector<int> tau;            // conj upper[m](z) = lower[tau[m]](conj z)
  bool tau_involutive = false;     // tau o tau = id under the shared labels
  std::vector<GlobalRoot> roots;   // upper[m] glued with lower[tau[m]]
};

/// k^2 stem roots on a domain without real points. upper_path must lie in
/// Im z > 0 (RealPointsInDomain). MatchingFailure if tau cannot be read off.
NoRealConstruction no_real_construction(const StemFn& F, const DomainPath& upper_path, int k,
                                        const TrackingOptions& opt = {});
std::vector<GlobalRoot> global_roots_no_real(const StemFn& F, const DomainPath& upper_path, int k,
                                             const TrackingOptions& opt = {});

/// Index of the member of `set` agreeing with g on a majority of samples
/// (same point list assumed); -1 if none.
int match_root(const GlobalRoot& g, const std::vector<GlobalRoot>& set, double match_tol = 1e-7);

/// max_i |sigma_k(values[i]) - F(points[i])|_inf / (1 + |F(points[i])|_inf).
double max_residual(const GlobalRoot& root, const StemFn& F, int k);

/// Minimal (a, 0, delta) in lexicographic order with 2a + delta + c = 0 mod k
/// (delta = 0 for odd k). Applied to a lift of class c it yields class 0.
MonodromyElement s_correction(int c, int k);

struct DihedralReport {
  bool xi_is_permutation = false;
  bool t_is_permutation = false;
  bool relation_holds = false;  // T xi T = xi^{-1}
  bool t_involutive = false;
  bool passed() const { return xi_is_permutation && t_is_permutation && relation_holds && t_involutive; }
};

/// The relation T xi T = xi^{-1} realized as permutations of a set of lifts
/// on a symmetric path.
DihedralReport dihedral_check(const std::vector<GlobalRoot>& lifts, int k, double match_tol = 1e-7);

struct GroupTableReport {
  int k = 0;
  int order = 0;
  int expected_order = 0;
  int kernel_size = 0;          // of (xi, eta) -> xi A_eta
  bool s_squared_ok = true;     // S^2 = xi A_xi (k even)
  bool s_power_k_ok = true;     // S^k = Id (k even)
  bool abelian = false;
  bool closed = false;
  bool zk_zk = false;           // #{g : g^d = 1} = d^2 for every d | k
  bool passed() const;
};

GroupTableReport verify_group_table(int k);

}  // namespace slicepow

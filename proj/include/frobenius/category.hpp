#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobenius/semigroup.hpp"
#include "frobenius/structure.hpp"

namespace frob {

/// Dense matrix between semigroup carriers; rows index the target.
using LinearMap = CMat;

/**
 * Finite pointed set with a positive weight on every point other than the
 * basepoint. Weights listed for the basepoint are ignored.
 **/
struct WPointedSet {
  std::vector<std::string> points;
  std::string basepoint;
  std::map<std::string, double> weights;

  /// Throws InputError on duplicate labels, a missing basepoint or a
  /// missing / non-positive weight.
  void validate() const;
  /// Points other than the basepoint, in order.
  std::vector<std::string> non_basepoints() const;
  double weight(const std::string& p) const;
  bool contains(const std::string& p) const;
};

using PointMap = std::map<std::string, std::string>;

/**
 * Basepoint-preserving map with its least constant M_f:
 *   sum_{x in f^-1(y)} alpha(x) <= M_f beta(y)   for y != y0.
 **/
struct WSetMorphism {
  WPointedSet source;
  WPointedSet target;
  PointMap map;
  double m_f = 0.0;

  const std::string& operator()(const std::string& x) const {
    return map.at(x);
  }
};

/// Validates f : X -> Y and computes M_f. A basepoint that is not sent to
/// the basepoint is reported with the offending image.
WSetMorphism check_wset_morphism(const PointMap& f, const WPointedSet& x,
                                 const WPointedSet& y);

WSetMorphism identity_morphism(const WPointedSet& x);

/// g o f.
WSetMorphism compose(const WSetMorphism& g, const WSetMorphism& f);

/// Largest |alpha(x) - beta(f(x))| over non-basepoints, and whether f is a
/// bijection sending the basepoint to the basepoint.
struct PointedIsoCheck {
  bool bijective = false;
  double weight_residual = 0.0;
};
PointedIsoCheck pointed_iso_check(const WSetMorphism& f);

/// Label of the i-th minimal ideal (group-like order).
std::string ideal_label(std::size_t i);

/// (Min(S) u {0}, 0, I -> 1/||g_I||^2). Requires S commutative Frobenius.
WPointedSet min_functor_object(const HilbSemigroup& s,
                               std::uint64_t seed = kDefaultSeed);

/**
 * Min of a semigroup morphism f : S -> T, a pointed map Min(T) -> Min(S)
 * sending J to the ideal spanned by f^dagger(g_J), or to the basepoint
 * when that vector vanishes. Throws when f is not a semigroup morphism or
 * an adjoint image is neither 0 nor a group-like of S.
 **/
WSetMorphism min_functor_morphism(const LinearMap& f, const HilbSemigroup& s,
                                  const HilbSemigroup& t,
                                  std::uint64_t seed = kDefaultSeed);

/// weighted_semigroup on the non-basepoints, in point order.
HilbSemigroup l2_functor_object(const WPointedSet& x,
                                double tol = kDefaultTol);

/**
 * u -> u o f from l2(target) to l2(source) in orthonormal coordinates:
 * entry (x, y) = sqrt(alpha(x) / beta(y)) when f(x) = y != y0.
 **/
LinearMap l2_functor_morphism(const WSetMorphism& f);

/// Unit of the equivalence, X -> Min(l2(X)).
WSetMorphism epsilon(const WPointedSet& x, double tol = kDefaultTol,
                     std::uint64_t seed = kDefaultSeed);

/// Phi^{-1} o pi_{J^perp} : S -> l2(Min(S)); rows are normalized group-likes.
LinearMap eta(const HilbSemigroup& s, std::uint64_t seed = kDefaultSeed);

/// Residuals of f (x) semigroup and cosemigroup identities for f : S -> T.
double semigroup_morphism_residual(const LinearMap& f, const HilbSemigroup& s,
                                   const HilbSemigroup& t);
double cosemigroup_morphism_residual(const LinearMap& f,
                                     const HilbSemigroup& s,
                                     const HilbSemigroup& t);
/// tol * max(1, ||f||)^2 * max(1, ||mu_S||, ||mu_T||)
double morphism_threshold(const LinearMap& f, const HilbSemigroup& s,
                          const HilbSemigroup& t);

struct AdjunctionReport {
  LinearMap sharp;
  Check sharp_is_semigroup;
  bool triangle_holds = false;
  bool competitor_rejected = false;
  bool epsilon_is_iso = false;
  bool eta_is_iso = false;
  bool semisimple = false;

  bool ok() const {
    return sharp_is_semigroup.ok && triangle_holds && competitor_rejected &&
           epsilon_is_iso && eta_is_iso == semisimple;
  }
};

/**
 * Builds f# = l2(f) o eta_S for f : X -> Min(S) and checks
 * Min(f#) o epsilon_X = f, that a perturbed competitor fails the same law,
 * that epsilon_X is an isomorphism and that eta_S is one iff S is
 * semisimple.
 **/
AdjunctionReport adjunction_check(const HilbSemigroup& s,
                                  const WPointedSet& x,
                                  const WSetMorphism& f,
                                  std::uint64_t seed = kDefaultSeed);

struct MorphismClass {
  Check semigroup;
  Check cosemigroup;
  bool ambidextrous = false;
  bool proper = false;
  bool partial_injection = false;
  /// Induced pointed map Min(T) -> Min(S) when f is a semigroup morphism
  /// and every adjoint image matched.
  std::optional<PointMap> induced;
};

MorphismClass classify_morphism(const LinearMap& f, const HilbSemigroup& s,
                                const HilbSemigroup& t,
                                std::uint64_t seed = kDefaultSeed);

struct RoundTripReport {
  bool epsilon_bijective = false;
  double epsilon_weight_residual = 0.0;
  /// Tensor of S restricted to J^perp against l2(Min(S)), matched via Phi.
  double phi_tensor_residual = 0.0;
  /// ||(1 - P) mu(P (x) P)|| for P the projector on J^perp.
  double jperp_closure_residual = 0.0;
  double tol = kDefaultTol;

  bool pass() const {
    return epsilon_bijective && epsilon_weight_residual <= tol &&
           phi_tensor_residual <= tol && jperp_closure_residual <= tol;
  }
};

/// Phi residuals for an arbitrary commutative Frobenius S.
RoundTripReport phi_round_trip(const HilbSemigroup& s,
                               std::uint64_t seed = kDefaultSeed);

/// Both round trips starting from X: epsilon_X and Phi for l2(X).
RoundTripReport round_trips(const WPointedSet& x, double tol = kDefaultTol,
                            std::uint64_t seed = kDefaultSeed);

/**
 * Unitary U with U mu_S (U^dagger (x) U^dagger) = mu_T, built by matching
 * minimal-ideal weights and radical dimensions. Empty when the weight
 * multisets differ. Both inputs must be commutative Frobenius.
 **/
std::optional<CMat> find_isomorphism(const HilbSemigroup& s,
                                     const HilbSemigroup& t,
                                     std::uint64_t seed = kDefaultSeed);

}  // namespace frob

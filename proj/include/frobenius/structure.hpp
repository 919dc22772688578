#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frobenius/orthogonal_set.hpp"
#include "frobenius/semigroup.hpp"

namespace frob {

/// Default seed for the randomized character search.
inline constexpr std::uint64_t kDefaultSeed = 0xF0B;

/// Number of fresh generic elements tried before giving up on a degenerate
/// spectrum.
inline constexpr int kCharacterAttempts = 8;

/**
 * One-dimensional ideal C g of a commutative Frobenius semigroup.
 *   g      group-like generator
 *   e      idempotent generator g / ||g||^2
 *   weight 1 / ||g||^2 = ||e||^2
 **/
struct MinimalIdeal {
  CVec g;
  CVec e;
  double weight = 0.0;
};

struct StructureReport {
  std::vector<CVec> group_likes;
  std::vector<CVec> radical_basis;
  std::vector<CVec> jperp_basis;
  std::vector<MinimalIdeal> minimal_ideals;
  bool semisimple = false;
  /// The algebra equals its radical (no group-likes).
  bool radical_flag = false;
  /// Principal-angle distance between annihilator and radical.
  Check annihilator_equals_radical;
  std::optional<CVec> unit;
  /// Worst residual of the unit identities when a unit candidate exists.
  std::optional<Check> unit_check;
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultTol;
};

/**
 * Group-like elements (mu^dagger(g) = g (x) g, g != 0) found through
 * characters: left eigenvectors of the regular representation of a random
 * generic element, kept when multiplicative, converted by Riesz
 * representation and post-verified against the comultiplication.
 * Requires only associativity; commutativity is not assumed.
 * Output is in canonical order (see sort_canonical).
 **/
std::vector<CVec> scan_group_likes(const HilbSemigroup& s,
                                   std::uint64_t seed = kDefaultSeed);

/// scan_group_likes restricted to commutative inputs.
std::vector<CVec> group_likes(const HilbSemigroup& s,
                              std::uint64_t seed = kDefaultSeed);

/// Orthonormal basis of span(group_likes)^perp.
std::vector<CVec> radical(const HilbSemigroup& s,
                          std::uint64_t seed = kDefaultSeed);

/// Two-sided annihilator {u : u v = v u = 0 for all v}, orthonormal basis.
std::vector<CVec> annihilator(const HilbSemigroup& s);

/**
 * Null space of the trace form T(i, j) = tr(M_{b_i} M_{b_j}). For a
 * finite-dimensional associative algebra over C this is the Jacobson
 * radical, independently of any Hilbert-space structure.
 **/
std::vector<CVec> radical_trace_oracle(const HilbSemigroup& s);

/// Throws AxiomError unless s is associative, commutative and Frobenius.
void require_commutative_frobenius(const HilbSemigroup& s, const char* what);

StructureReport decompose(const HilbSemigroup& s,
                          std::uint64_t seed = kDefaultSeed);

/**
 * The four semisimplicity verdicts that must agree on Frobenius inputs:
 * empty radical, empty annihilator, mu of full rank n (dense range),
 * mu^dagger injective.
 **/
struct SemisimplicityVerdicts {
  bool radical_empty = false;
  bool annihilator_empty = false;
  bool mult_full_rank = false;
  bool comult_injective = false;

  bool agree() const {
    return radical_empty == annihilator_empty &&
           annihilator_empty == mult_full_rank &&
           mult_full_rank == comult_injective;
  }
};

SemisimplicityVerdicts semisimplicity_verdicts(
    const HilbSemigroup& s, std::uint64_t seed = kDefaultSeed);

/**
 * Indices (into group_likes(s)) of the support of the idempotent e, i.e.
 * the unique set with e = sum g / ||g||^2. Throws if e e != e.
 **/
std::vector<std::size_t> idempotent_support(const HilbSemigroup& s,
                                            const CVec& e,
                                            std::uint64_t seed = kDefaultSeed);

/// u* = sum_g <g, u> g / ||g||^2.
CVec hstar_adjoint(const HilbSemigroup& s, const CVec& u,
                   std::uint64_t seed = kDefaultSeed);

/// max over basis pairs (w, w') of |<u w, w'> - <w, u* w'>|.
double hstar_residual(const HilbSemigroup& s, const CVec& u,
                      std::uint64_t seed = kDefaultSeed);

/**
 * For the chain F_1 c F_2 c ... of leading group-likes (canonical order),
 * the residuals ||p_{J^perp}(u) - u e_F|| with e_F = sum_{g in F} g/||g||^2.
 * Entries are (|F|, residual).
 **/
std::vector<std::pair<std::size_t, double>> approximate_unit_residuals(
    const HilbSemigroup& s, const CVec& u, std::uint64_t seed = kDefaultSeed);

struct IdealCheck {
  bool is_ideal = false;
  bool complement_is_ideal = false;
  double residual = 0.0;
  double complement_residual = 0.0;
};

/// Whether span(basis) and its orthogonal complement are two-sided ideals.
IdealCheck ideal_complement_check(const HilbSemigroup& s,
                                  const std::vector<CVec>& basis);

}  // namespace frob

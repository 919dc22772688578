#pragma once

#include <map>
#include <string>
#include <vector>

#include "frobenius/orthogonal_set.hpp"
#include "frobenius/semigroup.hpp"

namespace frob {

/**
 * Dictionary construction mu_X(u (x) v) = sum_x <u,x><v,x> x / ||x||^2.
 * The set is sorted canonically first, so equal sets give identical
 * tensors. An empty set gives the zero semigroup on C^dim.
 **/
HilbSemigroup from_orthogonal_set(const OrthogonalSet& x,
                                  double tol = kDefaultTol);

/** Finite weight function on labelled points. */
struct WeightSpec {
  std::vector<std::string> points;
  std::map<std::string, double> weights;
};

/**
 * Pointwise multiplication on l2_w(points), written in the orthonormal
 * coordinates delta_x / sqrt(w(x)): m(i, i, i) = w_i^{-1/2}.
 * Points keep the order of `points`.
 **/
HilbSemigroup weighted_semigroup(const WeightSpec& w,
                                 double tol = kDefaultTol);

/// Block multiplication on C^{n+m}; cross products vanish.
HilbSemigroup direct_sum(const HilbSemigroup& s, const HilbSemigroup& t);

HilbSemigroup zero_semigroup(std::size_t n, double tol = kDefaultTol);

/// m(u, v) = v(x0) u on C^n. Non-commutative for n >= 2.
HilbSemigroup epilogue_semigroup(std::size_t n, std::size_t x0,
                                 double tol = kDefaultTol);

/// Unitary change of basis: mu' = U mu (U^dagger (x) U^dagger).
HilbSemigroup transport(const HilbSemigroup& s, const CMat& u);

}  // namespace frob

#pragma once

#include <vector>

#include "frobenius/linalg.hpp"

// Reference computations that share no code path with the library.
namespace frob::oracle {

/// Largest singular value by power iteration on M^dagger M.
double power_norm(const CMat& m, int iterations = 2000);

/// sum_x <u,x><v,x> x / ||x||^2
CVec dictionary_product(const std::vector<CVec>& x, const CVec& u,
                        const CVec& v);

/// Frobenius norm of P_A - P_B with projectors from a QR factorization; an
/// upper bound for the largest principal-angle sine.
double projector_distance(const std::vector<CVec>& a,
                          const std::vector<CVec>& b, Eigen::Index dim);

/// Projector onto span(vs) via column-pivoted QR.
CMat qr_projector(const std::vector<CVec>& vs, Eigen::Index dim);

/**
 * Largest distance between members of `a` and their nearest member of
 * `b`; infinity when the sizes differ.
 **/
double set_distance(const std::vector<CVec>& a, const std::vector<CVec>& b);

}  // namespace frob::oracle

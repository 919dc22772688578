#pragma once

#include <vector>

#include "frobenius/linalg.hpp"

namespace frob {

/**
 * Finite set of pairwise orthogonal non-zero vectors of C^dim.
 * Validated on construction: zero vectors and non-orthogonal pairs are
 * rejected with the offending index (or pair of indices) in the message.
 **/
class OrthogonalSet {
 public:
  OrthogonalSet(std::size_t dim, std::vector<CVec> vectors,
                double tol = kDefaultTol);

  std::size_t dim() const { return dim_; }
  const std::vector<CVec>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }

 private:
  std::size_t dim_;
  std::vector<CVec> vectors_;
};

/**
 * Deterministic order used for group-likes and orthogonal sets: descending
 * norm, then coordinates compared lexicographically (real part, then
 * imaginary part; larger first). Values are compared after rounding to a
 * 1e-9 grid so that numerically equal inputs sort identically.
 **/
void sort_canonical(std::vector<CVec>& vs);

/// x -> x / ||x||^2 on every member; an involution.
OrthogonalSet theta_dual(const OrthogonalSet& x);

}  // namespace frob

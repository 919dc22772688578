#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

namespace frob {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/** Default relative tolerance for rank decisions and axiom checks. */
inline constexpr double kDefaultTol = 1e-9;

/**
 * Basis order of H (x) H: the pair (i, j) sits at i * n + j.
 * Every tensor reshape in the library goes through this map, which also
 * makes the associator (H (x) H) (x) H -> H (x) (H (x) H) the identity on
 * coordinates.
 **/
std::size_t product_index(std::size_t i, std::size_t j, std::size_t n);

/**
 * Orthonormal basis of the numerical null space of `m`. Singular values
 * at or below tol * sigma_max count as zero; an all-zero (or empty) matrix
 * has the whole domain as kernel.
 **/
std::vector<CVec> kernel_basis(const CMat& m, double tol = kDefaultTol);

/// Largest singular value; 0 for empty matrices.
double operator_norm(const CMat& m);

/**
 * Orthogonal projector onto span(basis). Throws frob::Error naming the
 * first vector that is numerically dependent on its predecessors.
 * `dim` is only consulted when `basis` is empty.
 **/
CMat orthogonal_projector(const std::vector<CVec>& basis,
                          Eigen::Index dim = 0, double tol = kDefaultTol);

/// Numerical rank with the same relative threshold as kernel_basis.
std::size_t numerical_rank(const CMat& m, double tol = kDefaultTol);

/// Orthonormal basis of span(vs), vectors of length `dim`.
std::vector<CVec> orthonormal_span(const std::vector<CVec>& vs,
                                   Eigen::Index dim, double tol = kDefaultTol);

/// Orthonormal basis of the orthogonal complement of span(vs) in C^dim.
std::vector<CVec> orthogonal_complement(const std::vector<CVec>& vs,
                                        Eigen::Index dim,
                                        double tol = kDefaultTol);

/**
 * Largest principal-angle sine between span(a) and span(b) (both given by
 * orthonormal bases in C^dim). Subspaces of different dimension are at
 * distance 1; two empty subspaces are at distance 0.
 **/
double subspace_distance(const std::vector<CVec>& a,
                         const std::vector<CVec>& b, Eigen::Index dim);

/// Stack vectors as the columns of a dim x k matrix.
CMat as_columns(const std::vector<CVec>& vs, Eigen::Index dim);

CMat kron(const CMat& a, const CMat& b);
CVec kron(const CVec& a, const CVec& b);

/// <u, v>, linear in the first argument.
Complex inner(const CVec& u, const CVec& v);

bool all_finite(const CMat& m);

/**
 * Multiplication table m(i, j, k) = <mu(b_i (x) b_j), b_k> in a fixed
 * orthonormal basis. The comultiplication table is conj(m(i, j, k)) and is
 * never stored.
 **/
class MultTensor {
 public:
  MultTensor() = default;
  explicit MultTensor(std::size_t n);
  MultTensor(std::size_t n, std::vector<Complex> entries);

  template <typename Fn>
  static MultTensor from_fn(std::size_t n, Fn&& fn) {
    std::vector<Complex> e(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          e[(i * n + j) * n + k] = fn(i, j, k);
    return MultTensor(n, std::move(e));
  }

  /// Inverse of matrix(): `m` is n x n^2 with column product_index(i, j).
  static MultTensor from_matrix(const CMat& m);

  std::size_t dim() const { return n_; }
  Complex operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * n_ + j) * n_ + k];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  /// Matrix of mu : H (x) H -> H, shape n x n^2.
  CMat matrix() const;

  double max_abs_diff(const MultTensor& other) const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> entries_;
};

}  // namespace frob

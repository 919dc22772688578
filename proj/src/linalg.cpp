#include "frobenius/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frobenius/error.hpp"

namespace frob {

std::size_t product_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i >= n || j >= n) {
    throw ContractViolation("product_index: (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") out of range for n = " +
                            std::to_string(n));
  }
  return i * n + j;
}

namespace {

Eigen::JacobiSVD<CMat> svd_of(const CMat& m, unsigned options) {
  return Eigen::JacobiSVD<CMat>(m, options);
}

std::size_t rank_from(const Eigen::VectorXd& sv, double tol) {
  if (sv.size() == 0) return 0;
  const double smax = sv(0);
  if (!(smax > 0.0)) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * smax) ++r;
  return r;
}

}  // namespace

std::vector<CVec> kernel_basis(const CMat& m, double tol) {
  const Eigen::Index cols = m.cols();
  std::vector<CVec> out;
  if (cols == 0) return out;
  if (m.rows() == 0 || m.isZero(0.0)) {
    for (Eigen::Index i = 0; i < cols; ++i)
      out.push_back(CVec::Unit(cols, i));
    return out;
  }
  auto svd = svd_of(m, Eigen::ComputeFullV);
  const std::size_t r = rank_from(svd.singularValues(), tol);
  const CMat& v = svd.matrixV();
  for (Eigen::Index i = static_cast<Eigen::Index>(r); i < cols; ++i)
    out.push_back(v.col(i));
  return out;
}

double operator_norm(const CMat& m) {
  if (m.size() == 0) return 0.0;
  if (m.isZero(0.0)) return 0.0;
  // sigma_max of the smaller Gram-side factor is cheaper for wide inputs.
  if (m.cols() > 4 * m.rows()) {
    CMat t = m.adjoint();
    return svd_of(t, 0).singularValues()(0);
  }
  return svd_of(m, 0).singularValues()(0);
}

std::size_t numerical_rank(const CMat& m, double tol) {
  if (m.size() == 0) return 0;
  if (m.isZero(0.0)) return 0;
  return rank_from(svd_of(m, 0).singularValues(), tol);
}

CMat orthogonal_projector(const std::vector<CVec>& basis, Eigen::Index dim,
                          double tol) {
  if (basis.empty()) return CMat::Zero(dim, dim);
  const Eigen::Index n = basis.front().size();
  std::vector<CVec> q;
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const CVec& v = basis[idx];
    if (v.size() != n) {
      throw DimensionError("orthogonal_projector: vector " +
                           std::to_string(idx) + " has length " +
                           std::to_string(v.size()) + ", expected " +
                           std::to_string(n));
    }
    CVec r = v;
    // two passes of Gram-Schmidt
    for (int pass = 0; pass < 2; ++pass)
      for (const CVec& e : q) r -= e.dot(r) * e;
    const double vn = v.norm();
    if (vn == 0.0 || r.norm() <= tol * vn) {
      throw Error("orthogonal_projector: vector " + std::to_string(idx) +
                  " is linearly dependent on the preceding vectors");
    }
    q.push_back(r / r.norm());
  }
  CMat qm = as_columns(q, n);
  return qm * qm.adjoint();
}

CMat as_columns(const std::vector<CVec>& vs, Eigen::Index dim) {
  CMat m(dim, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != dim)
      throw DimensionError("as_columns: vector " + std::to_string(i) +
                           " has wrong length");
    m.col(static_cast<Eigen::Index>(i)) = vs[i];
  }
  return m;
}

std::vector<CVec> orthonormal_span(const std::vector<CVec>& vs,
                                   Eigen::Index dim, double tol) {
  std::vector<CVec> out;
  if (vs.empty() || dim == 0) return out;
  CMat m = as_columns(vs, dim);
  if (m.isZero(0.0)) return out;
  auto svd = svd_of(m, Eigen::ComputeThinU);
  const std::size_t r = rank_from(svd.singularValues(), tol);
  for (std::size_t i = 0; i < r; ++i)
    out.push_back(svd.matrixU().col(static_cast<Eigen::Index>(i)));
  return out;
}

std::vector<CVec> orthogonal_complement(const std::vector<CVec>& vs,
                                        Eigen::Index dim, double tol) {
  if (vs.empty()) return kernel_basis(CMat::Zero(0, dim), tol);
  CMat rows = as_columns(vs, dim).adjoint();
  return kernel_basis(rows, tol);
}

double subspace_distance(const std::vector<CVec>& a,
                         const std::vector<CVec>& b, Eigen::Index dim) {
  if (a.size() != b.size()) return 1.0;
  if (a.empty()) return 0.0;
  CMat qa = as_columns(a, dim);
  CMat qb = as_columns(b, dim);
  CMat ra = qa - qb * (qb.adjoint() * qa);
  CMat rb = qb - qa * (qa.adjoint() * qb);
  return std::min(1.0, std::max(operator_norm(ra), operator_norm(rb)));
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVec kron(const CVec& a, const CVec& b) {
  CVec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Complex inner(const CVec& u, const CVec& v) {
  // Eigen's dot is conjugate-linear in its first argument.
  return v.dot(u);
}

bool all_finite(const CMat& m) { return m.allFinite(); }

MultTensor::MultTensor(std::size_t n) : n_(n), entries_(n * n * n) {}

MultTensor::MultTensor(std::size_t n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n * n) {
    throw DimensionError("MultTensor: expected " + std::to_string(n * n * n) +
                         " entries, got " + std::to_string(entries_.size()));
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error("MultTensor: non-finite entry");
  }
}

MultTensor MultTensor::from_matrix(const CMat& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  if (static_cast<std::size_t>(m.cols()) != n * n)
    throw DimensionError("MultTensor::from_matrix: expected n x n^2 matrix");
  return from_fn(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    return m(static_cast<Eigen::Index>(k),
             static_cast<Eigen::Index>(i * n + j));
  });
}

CMat MultTensor::matrix() const {
  const auto n = static_cast<Eigen::Index>(n_);
  CMat m(n, n * n);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i * n_ + j)) =
            (*this)(i, j, k);
  return m;
}

double MultTensor::max_abs_diff(const MultTensor& other) const {
  if (other.n_ != n_)
    throw DimensionError("MultTensor::max_abs_diff: dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    d = std::max(d, std::abs(entries_[i] - other.entries_[i]));
  return d;
}

}  // namespace frob

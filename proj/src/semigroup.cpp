#include "frobenius/semigroup.hpp"

#include <algorithm>
#include <cmath>

#include "frobenius/error.hpp"

namespace frob {

namespace {

void require_dim(const HilbSemigroup& s, const CVec& u, const char* what) {
  if (static_cast<std::size_t>(u.size()) != s.dim()) {
    throw DimensionError(std::string(what) + ": vector of length " +
                         std::to_string(u.size()) + " for a semigroup of dim " +
                         std::to_string(s.dim()));
  }
}

/// Matrix of the swap u (x) v -> v (x) u on C^n (x) C^n.
CMat swap_matrix(std::size_t n) {
  const auto nn = static_cast<Eigen::Index>(n * n);
  CMat p = CMat::Zero(nn, nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p(static_cast<Eigen::Index>(j * n + i),
        static_cast<Eigen::Index>(i * n + j)) = 1.0;
  return p;
}

}  // namespace

HilbSemigroup::HilbSemigroup(MultTensor tensor, double tol, std::string label)
    : tensor_(std::move(tensor)),
      tol_(tol),
      label_(std::move(label)),
      mult_(tensor_.matrix()),
      op_norm_(operator_norm(mult_)) {
  if (!(tol_ > 0.0)) throw Error("HilbSemigroup: tolerance must be positive");
}

HilbSemigroup HilbSemigroup::new_unchecked(MultTensor tensor, double tol,
                                           std::string label) {
  return HilbSemigroup(std::move(tensor), tol, std::move(label));
}

HilbSemigroup HilbSemigroup::new_checked(MultTensor tensor, double tol,
                                         std::string label) {
  HilbSemigroup s(std::move(tensor), tol, std::move(label));
  const double r = associativity_residual(s);
  const double t = s.threshold(2);
  if (!(r <= t)) {
    throw AxiomError("associative", r, t,
                     "multiplication is not associative (residual " +
                         sci(r) + ")");
  }
  return s;
}

double HilbSemigroup::threshold(int degree) const {
  return tol_ * std::pow(std::max(1.0, op_norm_), degree);
}

HilbSemigroup HilbSemigroup::with_tol(double tol) const {
  return HilbSemigroup(tensor_, tol, label_);
}

HilbSemigroup HilbSemigroup::with_label(std::string label) const {
  HilbSemigroup s = *this;
  s.label_ = std::move(label);
  return s;
}

CVec multiply(const HilbSemigroup& s, const CVec& u, const CVec& v) {
  require_dim(s, u, "multiply");
  require_dim(s, v, "multiply");
  return s.mult_matrix() * kron(u, v);
}

CVec comultiply(const HilbSemigroup& s, const CVec& u) {
  require_dim(s, u, "comultiply");
  return s.mult_matrix().adjoint() * u;
}

CMat mult_operator(const HilbSemigroup& s, const CVec& u) {
  require_dim(s, u, "mult_operator");
  const Eigen::Index n = s.size();
  CMat m = CMat::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    m.col(j) = s.mult_matrix() * kron(u, CVec(CVec::Unit(n, j)));
  return m;
}

CMat right_mult_operator(const HilbSemigroup& s, const CVec& u) {
  require_dim(s, u, "right_mult_operator");
  const Eigen::Index n = s.size();
  CMat m = CMat::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    m.col(j) = s.mult_matrix() * kron(CVec(CVec::Unit(n, j)), u);
  return m;
}

double associativity_residual(const HilbSemigroup& s) {
  const Eigen::Index n = s.size();
  if (n == 0) return 0.0;
  const CMat& mu = s.mult_matrix();
  const CMat id = CMat::Identity(n, n);
  CMat left = mu * kron(mu, id);
  CMat right = mu * kron(id, mu);
  return operator_norm(left - right);
}

double commutativity_residual(const HilbSemigroup& s) {
  if (s.dim() == 0) return 0.0;
  const CMat& mu = s.mult_matrix();
  return operator_norm(mu - mu * swap_matrix(s.dim()));
}

double frobenius_top_residual(const HilbSemigroup& s) {
  const Eigen::Index n = s.size();
  if (n == 0) return 0.0;
  const CMat& mu = s.mult_matrix();
  const CMat d = mu.adjoint();
  const CMat id = CMat::Identity(n, n);
  CMat lhs = kron(id, mu) * kron(d, id);
  return operator_norm(lhs - d * mu);
}

double frobenius_bottom_residual(const HilbSemigroup& s) {
  const Eigen::Index n = s.size();
  if (n == 0) return 0.0;
  const CMat& mu = s.mult_matrix();
  const CMat d = mu.adjoint();
  const CMat id = CMat::Identity(n, n);
  CMat lhs = kron(mu, id) * kron(id, d);
  return operator_norm(lhs - d * mu);
}

double special_residual(const HilbSemigroup& s) {
  const Eigen::Index n = s.size();
  if (n == 0) return 0.0;
  const CMat& mu = s.mult_matrix();
  return operator_norm(mu * mu.adjoint() - CMat::Identity(n, n));
}

double partial_isometry_residual(const HilbSemigroup& s) {
  if (s.dim() == 0) return 0.0;
  const CMat& mu = s.mult_matrix();
  const CMat d = mu.adjoint();
  return operator_norm(d * mu * d - d);
}

double bisemigroup_residual(const HilbSemigroup& s) {
  const std::size_t n = s.dim();
  if (n == 0) return 0.0;
  const CMat& mu = s.mult_matrix();
  const CMat d = mu.adjoint();
  // (d (x) d) has rows indexed by ((i, j), (k, l)); sigma_23 sends that row
  // to ((i, k), (j, l)).
  const CMat dd = kron(d, d);
  CMat permuted(dd.rows(), dd.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const auto from =
              static_cast<Eigen::Index>(((i * n + j) * n + k) * n + l);
          const auto to =
              static_cast<Eigen::Index>(((i * n + k) * n + j) * n + l);
          permuted.row(to) = dd.row(from);
        }
  CMat lhs = kron(mu, mu) * permuted;
  CMat diff = lhs - d * mu;
  return operator_norm(diff);
}

AxiomReport check_axioms(const HilbSemigroup& s) {
  AxiomReport r;
  r.op_norm = s.op_norm();
  r.associative = Check::against(associativity_residual(s), s.threshold(2));
  r.commutative = Check::against(commutativity_residual(s), s.threshold(1));
  r.frobenius_top = Check::against(frobenius_top_residual(s), s.threshold(2));
  r.frobenius_bottom =
      Check::against(frobenius_bottom_residual(s), s.threshold(2));
  r.special = Check::against(special_residual(s), s.threshold(2));
  r.comult_partial_isometry =
      Check::against(partial_isometry_residual(s), s.threshold(3));
  r.bisemigroup = Check::against(bisemigroup_residual(s), s.threshold(4));
  return r;
}

bool is_commutative_frobenius(const HilbSemigroup& s) {
  return commutativity_residual(s) <= s.threshold(1) &&
         frobenius_top_residual(s) <= s.threshold(2) &&
         frobenius_bottom_residual(s) <= s.threshold(2);
}

Check check_normal_multiplications(const HilbSemigroup& s) {
  const Eigen::Index n = s.size();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    CMat m = mult_operator(s, CVec::Unit(n, i));
    worst = std::max(worst,
                     operator_norm(m * m.adjoint() - m.adjoint() * m));
  }
  return Check::against(worst, s.threshold(2));
}

double bound(const HilbSemigroup& s) {
  return s.op_norm() <= s.tol() ? 1.0 : s.op_norm();
}

}  // namespace frob

#pragma once

#include <string>

#include "frobenius/linalg.hpp"

namespace frob {

/**
 * A multiplication mu : H (x) H -> H on H = C^n, given by its table in a
 * fixed orthonormal basis, together with the tolerance used to judge its
 * axioms.
 *
 * Tolerances are relative: an identity of degree d in mu is accepted when
 * its operator-norm residual is at most tol * max(1, ||mu||)^d.
 **/
class HilbSemigroup {
 public:
  /// Rejects tensors that fail associativity.
  static HilbSemigroup new_checked(MultTensor tensor, double tol = kDefaultTol,
                                   std::string label = {});
  /// No axiom checks. Used to build counterexamples.
  static HilbSemigroup new_unchecked(MultTensor tensor,
                                     double tol = kDefaultTol,
                                     std::string label = {});

  std::size_t dim() const { return tensor_.dim(); }
  Eigen::Index size() const { return static_cast<Eigen::Index>(dim()); }
  const MultTensor& tensor() const { return tensor_; }
  double tol() const { return tol_; }
  const std::string& label() const { return label_; }

  /// n x n^2 matrix of mu.
  const CMat& mult_matrix() const { return mult_; }
  /// n^2 x n matrix of the comultiplication mu^dagger.
  CMat comult_matrix() const { return mult_.adjoint(); }

  double op_norm() const { return op_norm_; }
  /// tol * max(1, ||mu||)^degree
  double threshold(int degree) const;

  HilbSemigroup with_tol(double tol) const;
  HilbSemigroup with_label(std::string label) const;

 private:
  HilbSemigroup(MultTensor tensor, double tol, std::string label);

  MultTensor tensor_;
  double tol_;
  std::string label_;
  CMat mult_;
  double op_norm_;
};

/** A verdict together with the residual that produced it. */
struct Check {
  bool ok = false;
  double residual = 0.0;
  double threshold = 0.0;

  static Check against(double residual, double threshold) {
    return Check{residual <= threshold, residual, threshold};
  }
  /// Residual within a factor 10 of the threshold on either side.
  bool marginal() const {
    return residual > threshold / 10.0 && residual <= threshold * 10.0;
  }
};

struct AxiomReport {
  Check associative;
  Check commutative;
  Check frobenius_top;
  Check frobenius_bottom;
  Check special;
  Check comult_partial_isometry;
  Check bisemigroup;
  double op_norm = 0.0;

  bool frobenius() const { return frobenius_top.ok && frobenius_bottom.ok; }
};

CVec multiply(const HilbSemigroup& s, const CVec& u, const CVec& v);

/// mu^dagger(u), a vector of length n^2 indexed by product_index.
CVec comultiply(const HilbSemigroup& s, const CVec& u);

AxiomReport check_axioms(const HilbSemigroup& s);

// Individual residuals (absolute operator norms).
double associativity_residual(const HilbSemigroup& s);
double commutativity_residual(const HilbSemigroup& s);
double frobenius_top_residual(const HilbSemigroup& s);
double frobenius_bottom_residual(const HilbSemigroup& s);
double special_residual(const HilbSemigroup& s);
double partial_isometry_residual(const HilbSemigroup& s);
double bisemigroup_residual(const HilbSemigroup& s);

/// Commutative and both Frobenius cells hold.
bool is_commutative_frobenius(const HilbSemigroup& s);

/// Matrix of v -> u v (left regular representation).
CMat mult_operator(const HilbSemigroup& s, const CVec& u);
/// Matrix of v -> v u.
CMat right_mult_operator(const HilbSemigroup& s, const CVec& u);

/// max_i || M_{b_i} M_{b_i}^dagger - M_{b_i}^dagger M_{b_i} ||.
Check check_normal_multiplications(const HilbSemigroup& s);

/// ||mu|| when mu != 0 (beyond tolerance), else 1.
double bound(const HilbSemigroup& s);

}  // namespace frob

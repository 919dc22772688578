#include "frobenius/constructors.hpp"

#include <cmath>

#include "frobenius/error.hpp"

namespace frob {

HilbSemigroup from_orthogonal_set(const OrthogonalSet& x, double tol) {
  std::vector<CVec> vs = x.vectors();
  sort_canonical(vs);
  const std::size_t n = x.dim();
  std::vector<Complex> e(n * n * n, Complex(0.0));
  for (const CVec& v : vs) {
    const double sq = v.squaredNorm();
    for (std::size_t i = 0; i < n; ++i) {
      const Complex ci = std::conj(v(static_cast<Eigen::Index>(i)));
      for (std::size_t j = 0; j < n; ++j) {
        const Complex cij = ci * std::conj(v(static_cast<Eigen::Index>(j)));
        for (std::size_t k = 0; k < n; ++k)
          e[(i * n + j) * n + k] += cij * v(static_cast<Eigen::Index>(k)) / sq;
      }
    }
  }
  return HilbSemigroup::new_unchecked(MultTensor(n, std::move(e)), tol,
                                      "orthogonal-set");
}

HilbSemigroup weighted_semigroup(const WeightSpec& w, double tol) {
  const std::size_t n = w.points.size();
  std::vector<double> scale(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = w.weights.find(w.points[i]);
    if (it == w.weights.end())
      throw InputError("weights: no weight for point '" + w.points[i] + "'");
    if (!(it->second > 0.0) || !std::isfinite(it->second)) {
      throw Error("weights: weight of '" + w.points[i] +
                  "' must be positive and finite, got " +
                  std::to_string(it->second));
    }
    scale[i] = 1.0 / std::sqrt(it->second);
  }
  MultTensor t = MultTensor::from_fn(
      n, [&](std::size_t i, std::size_t j, std::size_t k) -> Complex {
        return (i == j && j == k) ? scale[i] : 0.0;
      });
  return HilbSemigroup::new_unchecked(std::move(t), tol, "weighted");
}

HilbSemigroup direct_sum(const HilbSemigroup& s, const HilbSemigroup& t) {
  const std::size_t n = s.dim(), m = t.dim();
  MultTensor sum = MultTensor::from_fn(
      n + m, [&](std::size_t i, std::size_t j, std::size_t k) -> Complex {
        if (i < n && j < n && k < n) return s.tensor()(i, j, k);
        if (i >= n && j >= n && k >= n) return t.tensor()(i - n, j - n, k - n);
        return 0.0;
      });
  return HilbSemigroup::new_unchecked(std::move(sum),
                                      std::max(s.tol(), t.tol()),
                                      "direct-sum");
}

HilbSemigroup zero_semigroup(std::size_t n, double tol) {
  return HilbSemigroup::new_unchecked(MultTensor(n), tol, "zero");
}

HilbSemigroup epilogue_semigroup(std::size_t n, std::size_t x0, double tol) {
  if (n == 0) throw ContractViolation("epilogue_semigroup: n must be >= 1");
  if (x0 >= n) {
    throw ContractViolation("epilogue_semigroup: x0 = " + std::to_string(x0) +
                            " out of range for n = " + std::to_string(n));
  }
  MultTensor t = MultTensor::from_fn(
      n, [&](std::size_t i, std::size_t j, std::size_t k) -> Complex {
        return (j == x0 && k == i) ? 1.0 : 0.0;
      });
  return HilbSemigroup::new_unchecked(std::move(t), tol, "epilogue");
}

HilbSemigroup transport(const HilbSemigroup& s, const CMat& u) {
  const Eigen::Index n = s.size();
  if (u.rows() != n || u.cols() != n)
    throw DimensionError("transport: unitary has the wrong shape");
  const CMat ud = u.adjoint();
  const CMat m = u * s.mult_matrix() * kron(ud, ud);
  return HilbSemigroup::new_unchecked(MultTensor::from_matrix(m), s.tol(),
                                      s.label());
}

}  // namespace frob

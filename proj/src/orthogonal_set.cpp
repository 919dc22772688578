#include "frobenius/orthogonal_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frobenius/error.hpp"

namespace frob {

OrthogonalSet::OrthogonalSet(std::size_t dim, std::vector<CVec> vectors,
                             double tol)
    : dim_(dim), vectors_(std::move(vectors)) {
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const CVec& v = vectors_[i];
    if (static_cast<std::size_t>(v.size()) != dim_) {
      throw DimensionError("orthogonal set: vector " + std::to_string(i) +
                           " has length " + std::to_string(v.size()) +
                           ", expected " + std::to_string(dim_));
    }
    if (!v.allFinite())
      throw Error("orthogonal set: vector " + std::to_string(i) +
                  " has a non-finite entry");
    if (v.norm() == 0.0)
      throw Error("orthogonal set: vector " + std::to_string(i) + " is zero");
  }
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    for (std::size_t j = i + 1; j < vectors_.size(); ++j) {
      const double c = std::abs(inner(vectors_[i], vectors_[j]));
      if (c > tol * vectors_[i].norm() * vectors_[j].norm()) {
        throw Error("orthogonal set: vectors " + std::to_string(i) + " and " +
                    std::to_string(j) + " are not orthogonal (|<x,y>| = " +
                    sci(c) + ")");
      }
    }
}

namespace {

double grid(double x) { return std::round(x * 1e9); }

bool canonical_less(const CVec& a, const CVec& b) {
  const double na = grid(a.norm());
  const double nb = grid(b.norm());
  if (na != nb) return na > nb;
  const Eigen::Index len = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < len; ++i) {
    const double ra = grid(a(i).real()), rb = grid(b(i).real());
    if (ra != rb) return ra > rb;
    const double ia = grid(a(i).imag()), ib = grid(b(i).imag());
    if (ia != ib) return ia > ib;
  }
  return a.size() < b.size();
}

}  // namespace

void sort_canonical(std::vector<CVec>& vs) {
  std::stable_sort(vs.begin(), vs.end(), canonical_less);
}

OrthogonalSet theta_dual(const OrthogonalSet& x) {
  std::vector<CVec> out;
  out.reserve(x.size());
  for (const CVec& v : x.vectors()) out.push_back(v / v.squaredNorm());
  return OrthogonalSet(x.dim(), std::move(out));
}

}  // namespace frob

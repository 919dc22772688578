#include "oracles.hpp"

#include <Eigen/QR>
#include <limits>

namespace frob::oracle {

double power_norm(const CMat& m, int iterations) {
  if (m.size() == 0) return 0.0;
  const CMat g = m.adjoint() * m;
  CVec v = CVec::Ones(m.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = Complex(1.0 + 0.1 * static_cast<double>(i), 0.3);
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    CVec w = g * v;
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    lambda = nw / v.norm();
    v = w / nw;
  }
  return std::sqrt(lambda);
}

CVec dictionary_product(const std::vector<CVec>& x, const CVec& u,
                        const CVec& v) {
  CVec out = CVec::Zero(u.size());
  for (const CVec& g : x) {
    const Complex ug = g.dot(u);  // <u, g>
    const Complex vg = g.dot(v);
    out += ug * vg * g / g.squaredNorm();
  }
  return out;
}

CMat qr_projector(const std::vector<CVec>& vs, Eigen::Index dim) {
  if (vs.empty()) return CMat::Zero(dim, dim);
  CMat a(dim, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    a.col(static_cast<Eigen::Index>(i)) = vs[i];
  Eigen::ColPivHouseholderQR<CMat> qr(a);
  const Eigen::Index r = qr.rank();
  const CMat q = CMat(qr.householderQ()).leftCols(r);
  return q * q.adjoint();
}

double projector_distance(const std::vector<CVec>& a,
                          const std::vector<CVec>& b, Eigen::Index dim) {
  return (qr_projector(a, dim) - qr_projector(b, dim)).norm();
}

double set_distance(const std::vector<CVec>& a, const std::vector<CVec>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const CVec& x : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const CVec& y : b) best = std::min(best, (x - y).norm());
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace frob::oracle

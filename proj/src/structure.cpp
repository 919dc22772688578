#include "frobenius/structure.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "frobenius/error.hpp"

namespace frob {

namespace {

// Slack applied to candidate characters before post-verification; eigen
// vectors carry a few ulps of error per unit of conditioning.
constexpr double kCandidateSlack = 100.0;

CVec random_element(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVec a(n);
  for (Eigen::Index i = 0; i < n; ++i) a(i) = Complex(normal(rng), normal(rng));
  return a;
}

struct Candidate {
  CVec functional;  // coordinates chi(b_i) up to scale
  Complex eigenvalue;
};

/// Largest |chi(b_i b_j) - chi(b_i) chi(b_j)| over basis pairs.
double multiplicativity_residual(const HilbSemigroup& s, const CVec& chi) {
  CVec on_products = s.mult_matrix().transpose() * chi;
  return (on_products - kron(chi, chi)).cwiseAbs().maxCoeff();
}

/**
 * Candidate characters from the left spectrum of M_a. Returns false when a
 * non-zero eigenvalue has a multi-dimensional left eigenspace.
 **/
bool spectral_candidates(const CMat& ma, std::vector<Candidate>& out) {
  const Eigen::Index n = ma.rows();
  const CMat left = ma.transpose();
  Eigen::ComplexEigenSolver<CMat> es(left, true);
  if (es.info() != Eigen::Success) return false;
  const Eigen::VectorXcd& lambda = es.eigenvalues();
  const double scale = ma.norm();
  if (scale == 0.0) return true;
  const double zero_cut = 1e-7 * scale;
  const double cluster_cut = 1e-6 * scale;

  std::vector<Eigen::Index> nonzero;
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(lambda(i)) > zero_cut) nonzero.push_back(i);

  std::vector<bool> used(nonzero.size(), false);
  for (std::size_t a = 0; a < nonzero.size(); ++a) {
    if (used[a]) continue;
    std::vector<Eigen::Index> cluster{nonzero[a]};
    used[a] = true;
    for (std::size_t b = a + 1; b < nonzero.size(); ++b) {
      if (!used[b] &&
          std::abs(lambda(nonzero[b]) - lambda(nonzero[a])) <= cluster_cut) {
        cluster.push_back(nonzero[b]);
        used[b] = true;
      }
    }
    if (cluster.size() == 1) {
      out.push_back({es.eigenvectors().col(cluster[0]), lambda(cluster[0])});
      continue;
    }
    Complex mean = 0.0;
    for (Eigen::Index idx : cluster) mean += lambda(idx);
    mean /= static_cast<double>(cluster.size());
    CMat shifted = left - mean * CMat::Identity(n, n);
    std::vector<CVec> eigenspace = kernel_basis(shifted, 1e-6);
    if (eigenspace.size() > 1) return false;
    if (eigenspace.size() == 1) out.push_back({eigenspace[0], mean});
  }
  return true;
}

double candidate_threshold(const HilbSemigroup& s, double norm) {
  const double m = std::max({1.0, norm, s.op_norm()});
  return kCandidateSlack * s.tol() * m * m;
}

std::vector<CVec> normalized(const std::vector<CVec>& vs) {
  std::vector<CVec> out;
  out.reserve(vs.size());
  for (const CVec& v : vs) out.push_back(v / v.norm());
  return out;
}

}  // namespace

std::vector<CVec> scan_group_likes(const HilbSemigroup& s,
                                   std::uint64_t seed) {
  const Eigen::Index n = s.size();
  if (n == 0 || s.op_norm() <= s.tol()) return {};

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kCharacterAttempts; ++attempt) {
    const CVec a = random_element(rng, n);
    std::vector<Candidate> candidates;
    if (!spectral_candidates(mult_operator(s, a), candidates)) continue;

    std::vector<CVec> found;
    for (const Candidate& c : candidates) {
      const Complex at_a = c.functional.transpose() * a;
      if (std::abs(at_a) <= 1e-12 * c.functional.norm() * a.norm()) continue;
      // A character takes the value lambda on a.
      const CVec chi = c.functional * (c.eigenvalue / at_a);
      if (multiplicativity_residual(s, chi) >
          candidate_threshold(s, chi.norm()))
        continue;
      const CVec g = chi.conjugate();
      const double r = (comultiply(s, g) - kron(g, g)).norm();
      if (r > candidate_threshold(s, g.norm())) continue;
      found.push_back(g);
    }
    sort_canonical(found);
    return found;
  }
  throw Error("group-like extraction: degenerate non-zero spectrum in " +
              std::to_string(kCharacterAttempts) + " attempts (seed " +
              std::to_string(seed) + ")");
}

std::vector<CVec> group_likes(const HilbSemigroup& s, std::uint64_t seed) {
  const double r = commutativity_residual(s);
  if (!(r <= s.threshold(1))) {
    throw AxiomError(
        "commutative", r, s.threshold(1),
        "group_likes: input is not commutative (residual " +
            sci(r) +
            "); character extraction is defined only for the commutative "
            "theory, use annihilator or radical_trace_oracle instead");
  }
  return scan_group_likes(s, seed);
}

std::vector<CVec> radical(const HilbSemigroup& s, std::uint64_t seed) {
  return orthogonal_complement(normalized(group_likes(s, seed)), s.size(),
                               s.tol());
}

std::vector<CVec> annihilator(const HilbSemigroup& s) {
  const Eigen::Index n = s.size();
  if (n == 0) return {};
  CMat stacked(2 * n * n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const CVec b = CVec::Unit(n, j);
    stacked.block(2 * j * n, 0, n, n) = mult_operator(s, b);
    stacked.block((2 * j + 1) * n, 0, n, n) = right_mult_operator(s, b);
  }
  return kernel_basis(stacked, s.tol());
}

std::vector<CVec> radical_trace_oracle(const HilbSemigroup& s) {
  const Eigen::Index n = s.size();
  if (n == 0) return {};
  std::vector<CMat> ops;
  ops.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    ops.push_back(mult_operator(s, CVec::Unit(n, i)));
  CMat trace_form(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      trace_form(i, j) = (ops[static_cast<std::size_t>(i)] *
                          ops[static_cast<std::size_t>(j)])
                             .trace();
  // The trace form is symmetric, so its right kernel is the radical.
  return kernel_basis(trace_form, s.tol());
}

void require_commutative_frobenius(const HilbSemigroup& s, const char* what) {
  struct Item {
    const char* name;
    double residual;
    double threshold;
  };
  const Item items[] = {
      {"associative", associativity_residual(s), s.threshold(2)},
      {"commutative", commutativity_residual(s), s.threshold(1)},
      {"frobenius_top", frobenius_top_residual(s), s.threshold(2)},
      {"frobenius_bottom", frobenius_bottom_residual(s), s.threshold(2)},
  };
  for (const Item& it : items) {
    if (!(it.residual <= it.threshold)) {
      throw AxiomError(it.name, it.residual, it.threshold,
                       std::string(what) + ": axiom '" + it.name +
                           "' fails with residual " +
                           sci(it.residual) + " > " +
                           sci(it.threshold));
    }
  }
}

StructureReport decompose(const HilbSemigroup& s, std::uint64_t seed) {
  require_commutative_frobenius(s, "decompose");
  const Eigen::Index n = s.size();

  StructureReport r;
  r.seed = seed;
  r.tol = s.tol();
  r.group_likes = group_likes(s, seed);
  r.jperp_basis = normalized(r.group_likes);
  r.radical_basis = orthogonal_complement(r.jperp_basis, n, s.tol());
  for (const CVec& g : r.group_likes) {
    const double sq = g.squaredNorm();
    r.minimal_ideals.push_back({g, g / sq, 1.0 / sq});
  }
  r.semisimple = r.radical_basis.empty();
  r.radical_flag = r.group_likes.empty();
  r.annihilator_equals_radical = Check::against(
      subspace_distance(annihilator(s), r.radical_basis, n), s.tol());

  CVec candidate = CVec::Zero(n);
  for (const MinimalIdeal& m : r.minimal_ideals) candidate += m.e;
  double worst = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const CVec b = CVec::Unit(n, j);
    worst = std::max(worst, (multiply(s, candidate, b) - b).norm());
    worst = std::max(worst, (multiply(s, b, candidate) - b).norm());
  }
  const Check unit_check = Check::against(
      worst, s.tol() * std::max(1.0, s.op_norm() * candidate.norm()));
  r.unit_check = unit_check;
  if (unit_check.ok) r.unit = candidate;
  return r;
}

SemisimplicityVerdicts semisimplicity_verdicts(const HilbSemigroup& s,
                                               std::uint64_t seed) {
  SemisimplicityVerdicts v;
  v.radical_empty = radical(s, seed).empty();
  v.annihilator_empty = annihilator(s).empty();
  v.mult_full_rank = numerical_rank(s.mult_matrix(), s.tol()) == s.dim();
  v.comult_injective = kernel_basis(s.comult_matrix(), s.tol()).empty();
  return v;
}

std::vector<std::size_t> idempotent_support(const HilbSemigroup& s,
                                            const CVec& e,
                                            std::uint64_t seed) {
  require_commutative_frobenius(s, "idempotent_support");
  if (e.size() != s.size())
    throw DimensionError("idempotent_support: dimension mismatch");
  const double scale = std::max(1.0, e.norm());
  const double threshold =
      s.tol() * std::max(1.0, s.op_norm() * scale) * scale;
  const double r = (multiply(s, e, e) - e).norm();
  if (!(r <= threshold)) {
    throw Error("idempotent_support: input is not idempotent (||e e - e|| = " +
                sci(r) + ")");
  }
  const std::vector<CVec> g = group_likes(s, seed);
  std::vector<std::size_t> support;
  CVec rebuilt = CVec::Zero(s.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (std::abs(inner(e, g[i])) > 0.5) {
      support.push_back(i);
      rebuilt += g[i] / g[i].squaredNorm();
    }
  }
  const double rr = (rebuilt - e).norm();
  if (!(rr <= threshold)) {
    throw Error("idempotent_support: e is not a sum of minimal idempotents "
                "(residual " + sci(rr) + ")");
  }
  return support;
}

CVec hstar_adjoint(const HilbSemigroup& s, const CVec& u, std::uint64_t seed) {
  require_commutative_frobenius(s, "hstar_adjoint");
  if (u.size() != s.size())
    throw DimensionError("hstar_adjoint: dimension mismatch");
  CVec out = CVec::Zero(s.size());
  for (const CVec& g : group_likes(s, seed))
    out += inner(g, u) / g.squaredNorm() * g;
  return out;
}

double hstar_residual(const HilbSemigroup& s, const CVec& u,
                      std::uint64_t seed) {
  const CVec ustar = hstar_adjoint(s, u, seed);
  const Eigen::Index n = s.size();
  const CMat left = mult_operator(s, u);
  const CMat right = mult_operator(s, ustar);
  // <u b_j, b_k> = left(k, j);  <b_j, u* b_k> = conj(right(j, k)).
  double worst = 0.0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      worst = std::max(worst, std::abs(left(k, j) - std::conj(right(j, k))));
  return worst;
}

std::vector<std::pair<std::size_t, double>> approximate_unit_residuals(
    const HilbSemigroup& s, const CVec& u, std::uint64_t seed) {
  require_commutative_frobenius(s, "approximate_unit_residuals");
  if (u.size() != s.size())
    throw DimensionError("approximate_unit_residuals: dimension mismatch");
  const std::vector<CVec> g = group_likes(s, seed);
  CVec projected = CVec::Zero(s.size());
  for (const CVec& q : normalized(g)) projected += inner(u, q) * q;
  std::vector<std::pair<std::size_t, double>> out;
  CVec partial_unit = CVec::Zero(s.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    partial_unit += g[k] / g[k].squaredNorm();
    out.emplace_back(k + 1,
                     (projected - multiply(s, u, partial_unit)).norm());
  }
  return out;
}

namespace {

double ideal_residual(const HilbSemigroup& s, const std::vector<CVec>& q) {
  const Eigen::Index n = s.size();
  if (q.empty() || n == 0) return 0.0;
  const CMat p = orthogonal_projector(q, n);
  const CMat off = CMat::Identity(n, n) - p;
  double worst = 0.0;
  for (const CVec& v : q)
    for (Eigen::Index j = 0; j < n; ++j) {
      const CVec b = CVec::Unit(n, j);
      worst = std::max(worst, (off * multiply(s, b, v)).norm());
      worst = std::max(worst, (off * multiply(s, v, b)).norm());
    }
  return worst;
}

}  // namespace

IdealCheck ideal_complement_check(const HilbSemigroup& s,
                                  const std::vector<CVec>& basis) {
  const Eigen::Index n = s.size();
  const std::vector<CVec> q = orthonormal_span(basis, n, s.tol());
  const std::vector<CVec> qc = orthogonal_complement(q, n, s.tol());
  IdealCheck c;
  c.residual = ideal_residual(s, q);
  c.complement_residual = ideal_residual(s, qc);
  c.is_ideal = c.residual <= s.threshold(1);
  c.complement_is_ideal = c.complement_residual <= s.threshold(1);
  return c;
}

}  // namespace frob

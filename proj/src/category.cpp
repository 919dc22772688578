#include "frobenius/category.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "frobenius/constructors.hpp"
#include "frobenius/error.hpp"

namespace frob {

void WPointedSet::validate() const {
  std::set<std::string> seen;
  for (const std::string& p : points)
    if (!seen.insert(p).second)
      throw InputError("pointed set: duplicate point '" + p + "'");
  if (!seen.count(basepoint))
    throw InputError("pointed set: basepoint '" + basepoint +
                     "' is not among the points");
  for (const std::string& p : points) {
    if (p == basepoint) continue;
    const auto it = weights.find(p);
    if (it == weights.end())
      throw InputError("pointed set: no weight for point '" + p + "'");
    if (!(it->second > 0.0) || !std::isfinite(it->second))
      throw InputError("pointed set: weight of '" + p +
                       "' must be positive and finite");
  }
  for (const auto& [p, w] : weights)
    if (!seen.count(p))
      throw InputError("pointed set: weight given for unknown point '" + p +
                       "'");
}

std::vector<std::string> WPointedSet::non_basepoints() const {
  std::vector<std::string> out;
  for (const std::string& p : points)
    if (p != basepoint) out.push_back(p);
  return out;
}

double WPointedSet::weight(const std::string& p) const {
  return weights.at(p);
}

bool WPointedSet::contains(const std::string& p) const {
  return std::find(points.begin(), points.end(), p) != points.end();
}

WSetMorphism check_wset_morphism(const PointMap& f, const WPointedSet& x,
                                 const WPointedSet& y) {
  x.validate();
  y.validate();
  for (const auto& [from, to] : f) {
    if (!x.contains(from))
      throw InputError("morphism: '" + from + "' is not a source point");
    if (!y.contains(to))
      throw InputError("morphism: image '" + to + "' of '" + from +
                       "' is not a target point");
  }
  for (const std::string& p : x.points)
    if (!f.count(p)) throw InputError("morphism: no image for '" + p + "'");
  const std::string& image = f.at(x.basepoint);
  if (image != y.basepoint) {
    throw InputError("morphism: basepoint '" + x.basepoint + "' is sent to '" +
                     image + "' instead of '" + y.basepoint + "'");
  }

  std::map<std::string, double> fiber;
  for (const std::string& p : x.non_basepoints()) {
    const std::string& q = f.at(p);
    if (q != y.basepoint) fiber[q] += x.weight(p);
  }
  double m_f = 0.0;
  for (const auto& [q, total] : fiber) m_f = std::max(m_f, total / y.weight(q));
  return WSetMorphism{x, y, f, m_f};
}

WSetMorphism identity_morphism(const WPointedSet& x) {
  PointMap f;
  for (const std::string& p : x.points) f[p] = p;
  return check_wset_morphism(f, x, x);
}

WSetMorphism compose(const WSetMorphism& g, const WSetMorphism& f) {
  if (f.target.points != g.source.points ||
      f.target.basepoint != g.source.basepoint)
    throw ContractViolation("compose: morphisms are not composable");
  PointMap h;
  for (const auto& [x, y] : f.map) h[x] = g(y);
  return check_wset_morphism(h, f.source, g.target);
}

PointedIsoCheck pointed_iso_check(const WSetMorphism& f) {
  PointedIsoCheck c;
  std::set<std::string> images;
  for (const auto& [x, y] : f.map) images.insert(y);
  c.bijective = images.size() == f.map.size() &&
                images.size() == f.target.points.size() &&
                f(f.source.basepoint) == f.target.basepoint;
  for (const std::string& x : f.source.non_basepoints()) {
    const std::string& y = f(x);
    if (y == f.target.basepoint) continue;
    c.weight_residual = std::max(
        c.weight_residual, std::abs(f.source.weight(x) - f.target.weight(y)));
  }
  return c;
}

std::string ideal_label(std::size_t i) { return "I" + std::to_string(i); }

namespace {

const std::string kMinBasepoint = "0";

WPointedSet min_object_from(const std::vector<CVec>& g) {
  WPointedSet x;
  x.basepoint = kMinBasepoint;
  x.points.push_back(kMinBasepoint);
  for (std::size_t i = 0; i < g.size(); ++i) {
    x.points.push_back(ideal_label(i));
    x.weights[ideal_label(i)] = 1.0 / g[i].squaredNorm();
  }
  return x;
}

enum class MatchKind { Zero, GroupLike, None, Ambiguous };

struct Match {
  MatchKind kind = MatchKind::None;
  std::size_t index = 0;
};

Match match_group_like(const CVec& v, const std::vector<CVec>& g,
                       double radius) {
  if (v.norm() <= radius) return {MatchKind::Zero, 0};
  Match m;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if ((v - g[i]).norm() > radius) continue;
    if (m.kind == MatchKind::GroupLike) return {MatchKind::Ambiguous, i};
    m = {MatchKind::GroupLike, i};
  }
  return m;
}

double match_radius(const LinearMap& f, const HilbSemigroup& s,
                    const HilbSemigroup& t) {
  return std::max(s.tol(), t.tol()) * std::max(1.0, operator_norm(f)) *
         std::max(bound(s), bound(t));
}

void require_shape(const LinearMap& f, const HilbSemigroup& s,
                   const HilbSemigroup& t, const char* what) {
  if (f.rows() != t.size() || f.cols() != s.size()) {
    throw DimensionError(std::string(what) + ": map is " +
                         std::to_string(f.rows()) + "x" +
                         std::to_string(f.cols()) + ", expected " +
                         std::to_string(t.dim()) + "x" +
                         std::to_string(s.dim()));
  }
}

/// Pointed map Min(T) -> Min(S) induced by f, or the first failure.
struct Induced {
  std::optional<PointMap> map;
  std::string failure;
};

Induced induce(const LinearMap& f, const std::vector<CVec>& gs,
               const std::vector<CVec>& gt, double radius) {
  PointMap m;
  m[kMinBasepoint] = kMinBasepoint;
  for (std::size_t j = 0; j < gt.size(); ++j) {
    const CVec image = f.adjoint() * gt[j];
    const Match hit = match_group_like(image, gs, radius);
    switch (hit.kind) {
      case MatchKind::Zero:
        m[ideal_label(j)] = kMinBasepoint;
        break;
      case MatchKind::GroupLike:
        m[ideal_label(j)] = ideal_label(hit.index);
        break;
      case MatchKind::Ambiguous:
        return {std::nullopt, "adjoint image of " + ideal_label(j) +
                                  " is within the acceptance radius of two "
                                  "group-likes"};
      case MatchKind::None:
        return {std::nullopt,
                "adjoint image not group-like (ideal " + ideal_label(j) + ")"};
    }
  }
  return {m, {}};
}

}  // namespace

WPointedSet min_functor_object(const HilbSemigroup& s, std::uint64_t seed) {
  require_commutative_frobenius(s, "min_functor_object");
  return min_object_from(group_likes(s, seed));
}

double semigroup_morphism_residual(const LinearMap& f, const HilbSemigroup& s,
                                   const HilbSemigroup& t) {
  require_shape(f, s, t, "semigroup_morphism_residual");
  if (f.size() == 0) return 0.0;
  return operator_norm(f * s.mult_matrix() - t.mult_matrix() * kron(f, f));
}

double cosemigroup_morphism_residual(const LinearMap& f,
                                     const HilbSemigroup& s,
                                     const HilbSemigroup& t) {
  require_shape(f, s, t, "cosemigroup_morphism_residual");
  if (f.size() == 0) return 0.0;
  return operator_norm(kron(f, f) * s.comult_matrix() -
                       t.comult_matrix() * f);
}

double morphism_threshold(const LinearMap& f, const HilbSemigroup& s,
                          const HilbSemigroup& t) {
  const double nf = std::max(1.0, operator_norm(f));
  return std::max(s.tol(), t.tol()) * nf * nf *
         std::max({1.0, s.op_norm(), t.op_norm()});
}

WSetMorphism min_functor_morphism(const LinearMap& f, const HilbSemigroup& s,
                                  const HilbSemigroup& t,
                                  std::uint64_t seed) {
  require_commutative_frobenius(s, "min_functor_morphism");
  require_commutative_frobenius(t, "min_functor_morphism");
  const double r = semigroup_morphism_residual(f, s, t);
  const double threshold = morphism_threshold(f, s, t);
  if (!(r <= threshold)) {
    throw AxiomError("semigroup_morphism", r, threshold,
                     "min_functor_morphism: map is not a semigroup morphism "
                     "(residual " + sci(r) + ")");
  }
  const std::vector<CVec> gs = group_likes(s, seed);
  const std::vector<CVec> gt = group_likes(t, seed);
  Induced induced = induce(f, gs, gt, match_radius(f, s, t));
  if (!induced.map) throw Error("min_functor_morphism: " + induced.failure);
  return check_wset_morphism(*induced.map, min_object_from(gt),
                             min_object_from(gs));
}

HilbSemigroup l2_functor_object(const WPointedSet& x, double tol) {
  x.validate();
  WeightSpec w{x.non_basepoints(), {}};
  for (const std::string& p : w.points) w.weights[p] = x.weight(p);
  return weighted_semigroup(w, tol).with_label("l2");
}

LinearMap l2_functor_morphism(const WSetMorphism& f) {
  const std::vector<std::string> xs = f.source.non_basepoints();
  const std::vector<std::string> ys = f.target.non_basepoints();
  std::map<std::string, Eigen::Index> column;
  for (std::size_t j = 0; j < ys.size(); ++j)
    column[ys[j]] = static_cast<Eigen::Index>(j);
  LinearMap l = LinearMap::Zero(static_cast<Eigen::Index>(xs.size()),
                                static_cast<Eigen::Index>(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::string& y = f(xs[i]);
    if (y == f.target.basepoint) continue;
    l(static_cast<Eigen::Index>(i), column.at(y)) =
        std::sqrt(f.source.weight(xs[i]) / f.target.weight(y));
  }
  return l;
}

WSetMorphism epsilon(const WPointedSet& x, double tol, std::uint64_t seed) {
  const HilbSemigroup l2 = l2_functor_object(x, tol);
  const std::vector<CVec> g = group_likes(l2, seed);
  const std::vector<std::string> xs = x.non_basepoints();
  PointMap m;
  m[x.basepoint] = kMinBasepoint;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const CVec expected =
        CVec::Unit(l2.size(), static_cast<Eigen::Index>(i)) /
        std::sqrt(x.weight(xs[i]));
    const Match hit = match_group_like(expected, g, tol * bound(l2));
    if (hit.kind != MatchKind::GroupLike)
      throw Error("epsilon: no group-like for point '" + xs[i] + "'");
    m[xs[i]] = ideal_label(hit.index);
  }
  return check_wset_morphism(m, x, min_object_from(g));
}

LinearMap eta(const HilbSemigroup& s, std::uint64_t seed) {
  const std::vector<CVec> g = group_likes(s, seed);
  LinearMap e(static_cast<Eigen::Index>(g.size()), s.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    e.row(static_cast<Eigen::Index>(i)) = (g[i] / g[i].norm()).adjoint();
  return e;
}

AdjunctionReport adjunction_check(const HilbSemigroup& s,
                                  const WPointedSet& x,
                                  const WSetMorphism& f,
                                  std::uint64_t seed) {
  AdjunctionReport r;
  r.semisimple = decompose(s, seed).semisimple;
  const WPointedSet min_s = min_functor_object(s, seed);
  if (f.source.points != x.points || f.target.points != min_s.points)
    throw ContractViolation("adjunction_check: f must map X to Min(S)");

  const LinearMap e = eta(s, seed);
  r.eta_is_iso = e.rows() == e.cols() &&
                 numerical_rank(e, s.tol()) == static_cast<std::size_t>(
                                                   e.rows());
  r.sharp = l2_functor_morphism(f) * e;

  const HilbSemigroup l2x = l2_functor_object(x, s.tol());
  const WSetMorphism eps = epsilon(x, s.tol(), seed);
  const PointedIsoCheck iso = pointed_iso_check(eps);
  r.epsilon_is_iso = iso.bijective && iso.weight_residual <= s.tol();

  // Min(h) o epsilon_X == f, or false when h is not a morphism.
  auto satisfies_triangle = [&](const LinearMap& h) {
    if (!(semigroup_morphism_residual(h, s, l2x) <=
          morphism_threshold(h, s, l2x)))
      return false;
    try {
      return compose(min_functor_morphism(h, s, l2x, seed), eps).map == f.map;
    } catch (const Error&) {
      return false;
    }
  };

  r.sharp_is_semigroup =
      Check::against(semigroup_morphism_residual(r.sharp, s, l2x),
                     morphism_threshold(r.sharp, s, l2x));
  r.triangle_holds = r.sharp_is_semigroup.ok && satisfies_triangle(r.sharp);

  if (r.sharp.size() == 0) {
    r.competitor_rejected = true;
  } else {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    LinearMap noise(r.sharp.rows(), r.sharp.cols());
    for (Eigen::Index i = 0; i < noise.size(); ++i)
      noise(i) = Complex(normal(rng), normal(rng));
    const double step = 1e-3 * std::max(1.0, operator_norm(r.sharp));
    r.competitor_rejected =
        !satisfies_triangle(r.sharp + step * noise / operator_norm(noise));
  }
  return r;
}

MorphismClass classify_morphism(const LinearMap& f, const HilbSemigroup& s,
                                const HilbSemigroup& t, std::uint64_t seed) {
  MorphismClass c;
  c.semigroup = Check::against(semigroup_morphism_residual(f, s, t),
                               morphism_threshold(f, s, t));
  c.cosemigroup = Check::against(cosemigroup_morphism_residual(f, s, t),
                                 morphism_threshold(f, s, t));
  c.ambidextrous = c.semigroup.ok && c.cosemigroup.ok;
  if (!c.semigroup.ok) return c;

  const std::vector<CVec> gs = scan_group_likes(s, seed);
  const std::vector<CVec> gt = scan_group_likes(t, seed);
  Induced induced = induce(f, gs, gt, match_radius(f, s, t));
  if (!induced.map) return c;
  c.proper = true;
  c.partial_injection = true;
  std::map<std::string, int> fiber;
  for (const auto& [from, to] : *induced.map) {
    if (from == kMinBasepoint) continue;
    if (to == kMinBasepoint) {
      c.proper = false;
    } else if (++fiber[to] > 1) {
      c.partial_injection = false;
    }
  }
  c.induced = std::move(induced.map);
  return c;
}

namespace {

void fill_phi(RoundTripReport& r, const HilbSemigroup& s,
              const StructureReport& d) {
  const Eigen::Index n = s.size();
  const auto k = static_cast<Eigen::Index>(d.jperp_basis.size());
  if (n == 0) return;
  const CMat q = as_columns(d.jperp_basis, n);
  const CMat restricted = q.adjoint() * s.mult_matrix() * kron(q, q);
  const HilbSemigroup l2 =
      l2_functor_object(min_object_from(d.group_likes), s.tol());
  if (k > 0) {
    r.phi_tensor_residual =
        (restricted - l2.mult_matrix()).cwiseAbs().maxCoeff();
  }
  const CMat p = q * q.adjoint();
  r.jperp_closure_residual = operator_norm(
      (CMat::Identity(n, n) - p) * s.mult_matrix() * kron(p, p));
}

void fill_epsilon(RoundTripReport& r, const WPointedSet& x,
                  std::uint64_t seed) {
  const PointedIsoCheck iso = pointed_iso_check(epsilon(x, r.tol, seed));
  r.epsilon_bijective = iso.bijective;
  r.epsilon_weight_residual = iso.weight_residual;
}

}  // namespace

RoundTripReport phi_round_trip(const HilbSemigroup& s, std::uint64_t seed) {
  RoundTripReport r;
  r.tol = s.tol();
  const StructureReport d = decompose(s, seed);
  fill_phi(r, s, d);
  fill_epsilon(r, min_object_from(d.group_likes), seed);
  return r;
}

RoundTripReport round_trips(const WPointedSet& x, double tol,
                            std::uint64_t seed) {
  RoundTripReport r;
  r.tol = tol;
  fill_epsilon(r, x, seed);
  const HilbSemigroup l2 = l2_functor_object(x, tol);
  fill_phi(r, l2, decompose(l2, seed));
  return r;
}

std::optional<CMat> find_isomorphism(const HilbSemigroup& s,
                                     const HilbSemigroup& t,
                                     std::uint64_t seed) {
  if (s.dim() != t.dim()) return std::nullopt;
  const StructureReport ds = decompose(s, seed);
  const StructureReport dt = decompose(t, seed);
  if (ds.minimal_ideals.size() != dt.minimal_ideals.size())
    return std::nullopt;

  auto by_weight = [](const StructureReport& d) {
    std::vector<std::size_t> order(d.minimal_ideals.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return d.minimal_ideals[a].weight <
                              d.minimal_ideals[b].weight;
                     });
    return order;
  };
  const std::vector<std::size_t> os = by_weight(ds), ot = by_weight(dt);
  const double tol = std::max(s.tol(), t.tol());
  const Eigen::Index n = s.size();
  CMat u = CMat::Zero(n, n);
  for (std::size_t i = 0; i < os.size(); ++i) {
    const double ws = ds.minimal_ideals[os[i]].weight;
    const double wt = dt.minimal_ideals[ot[i]].weight;
    if (std::abs(ws - wt) > tol * std::max({1.0, ws, wt}))
      return std::nullopt;
    u += dt.jperp_basis[ot[i]] * ds.jperp_basis[os[i]].adjoint();
  }
  for (std::size_t i = 0; i < ds.radical_basis.size(); ++i)
    u += dt.radical_basis[i] * ds.radical_basis[i].adjoint();
  if (!(semigroup_morphism_residual(u, s, t) <= morphism_threshold(u, s, t)))
    return std::nullopt;
  return u;
}

}  // namespace frob

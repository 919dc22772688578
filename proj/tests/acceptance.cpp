// Acceptance suite: one PASS/FAIL line per criterion, fixed seeds.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "frobenius/category.hpp"
#include "frobenius/constructors.hpp"
#include "frobenius/structure.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace frob;
using frob::testing::Rng;

namespace {

constexpr std::uint64_t kSeed = 20240917;
constexpr int kCases = 200;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Running maximum of a residual against a fixed limit.
struct Worst {
  double limit;
  double value = 0.0;
  int failures = 0;

  void add(double r) {
    value = std::max(value, r);
    if (!(r <= limit)) ++failures;
  }
  std::string describe(const char* what) const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s max %.2e (limit %.0e)", what, value,
                  limit);
    return buf;
  }
};

Outcome combine(std::initializer_list<std::pair<const Worst*, const char*>> ws,
                int cases, int extra_failures = 0) {
  Outcome o;
  o.detail = std::to_string(cases) + " cases;";
  int failures = extra_failures;
  for (const auto& [w, name] : ws) {
    o.detail += " " + w->describe(name) + ";";
    failures += w->failures;
  }
  o.pass = failures == 0;
  if (failures) o.detail += " " + std::to_string(failures) + " violations";
  return o;
}

std::vector<testing::FrobeniusInstance> frobenius_family(int count,
                                                         std::uint64_t seed) {
  Rng rng(seed);
  std::vector<testing::FrobeniusInstance> out;
  for (int i = 0; i < count; ++i) out.push_back(testing::random_frobenius(rng));
  return out;
}

CMat projector(const std::vector<CVec>& b, Eigen::Index n) {
  return orthogonal_projector(b, n);
}

Outcome axiom_suite() {
  Rng rng(kSeed + 1);
  Worst w{1e-8};
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = testing::uniform_index(rng, 1, 8);
    const std::size_t k = testing::uniform_index(rng, 1, n);
    const HilbSemigroup s =
        from_orthogonal_set(testing::random_orthogonal_set(rng, n, k));
    w.add(associativity_residual(s));
    w.add(commutativity_residual(s));
    w.add(frobenius_top_residual(s));
    w.add(frobenius_bottom_residual(s));
  }
  return combine({{&w, "residual"}}, kCases);
}

Outcome dictionary_bijection() {
  Rng rng(kSeed + 2);
  Worst vec{1e-7}, tensor{1e-8};
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = testing::uniform_index(rng, 1, 8);
    const OrthogonalSet x = testing::random_orthogonal_set(
        rng, n, testing::uniform_index(rng, 0, n));
    vec.add(oracle::set_distance(group_likes(from_orthogonal_set(x)),
                                 x.vectors()));

    // Semisimple input: a full orthogonal basis, moved by a unitary.
    const HilbSemigroup s = transport(
        from_orthogonal_set(testing::random_orthogonal_set(rng, n, n)),
        testing::random_unitary(rng, static_cast<Eigen::Index>(n)));
    const HilbSemigroup back =
        from_orthogonal_set(OrthogonalSet(n, group_likes(s)));
    tensor.add(back.tensor().max_abs_diff(s.tensor()));
  }
  return combine({{&vec, "group-like error"}, {&tensor, "tensor error"}},
                 kCases);
}

Outcome structure_theorem(const std::vector<testing::FrobeniusInstance>& fam) {
  Worst angle{1e-8}, closed{1e-8}, kills{1e-8};
  for (const auto& inst : fam) {
    const HilbSemigroup& s = inst.s;
    const Eigen::Index n = s.size();
    const StructureReport r = decompose(s);
    angle.add(subspace_distance(r.radical_basis, annihilator(s), n));
    const CMat pj = projector(r.radical_basis, n);
    const CMat pp = projector(r.jperp_basis, n);
    const CMat id = CMat::Identity(n, n);
    closed.add(operator_norm((id - pp) * s.mult_matrix() * kron(pp, pp)));
    kills.add(operator_norm(s.mult_matrix() * kron(pj, id)));
    kills.add(operator_norm(s.mult_matrix() * kron(id, pj)));
  }
  return combine({{&angle, "J vs A angle"},
                  {&closed, "J-perp closure"},
                  {&kills, "J.H"}},
                 static_cast<int>(fam.size()));
}

Outcome semisimplicity(const std::vector<testing::FrobeniusInstance>& fam) {
  int disagreements = 0;
  for (const auto& inst : fam)
    if (!semisimplicity_verdicts(inst.s).agree()) ++disagreements;
  Rng rng(kSeed + 4);
  int special_failures = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = testing::uniform_index(rng, 1, 8);
    const HilbSemigroup s =
        transport(from_orthogonal_set(testing::random_orthonormal_basis(rng, n)),
                  testing::random_unitary(rng, static_cast<Eigen::Index>(n)));
    if (!check_axioms(s).special.ok || !decompose(s).semisimple)
      ++special_failures;
  }
  Outcome o;
  o.pass = disagreements == 0 && special_failures == 0;
  o.detail = std::to_string(fam.size()) + " cases, " +
             std::to_string(disagreements) +
             " verdict disagreements; 100 special cases, " +
             std::to_string(special_failures) + " not semisimple";
  return o;
}

Outcome unit_criterion(const std::vector<testing::FrobeniusInstance>& fam) {
  Worst w{1e-8};
  int mismatches = 0;
  for (const auto& inst : fam) {
    const HilbSemigroup& s = inst.s;
    const Eigen::Index n = s.size();
    const StructureReport r = decompose(s);
    if (r.unit.has_value() != r.semisimple) ++mismatches;
    if (!r.unit) continue;
    CVec e = CVec::Zero(n);
    for (const CVec& g : r.group_likes) e += g / g.squaredNorm();
    w.add((e - *r.unit).norm());
    for (Eigen::Index j = 0; j < n; ++j) {
      const CVec b = CVec::Unit(n, j);
      w.add((multiply(s, e, b) - b).norm());
      w.add((multiply(s, b, e) - b).norm());
    }
  }
  return combine({{&w, "unit residual"}}, static_cast<int>(fam.size()),
                 mismatches);
}

Outcome norm_bound(const std::vector<testing::FrobeniusInstance>& fam) {
  Worst upper{1e-8}, lower{1e-8};
  for (const auto& inst : fam) {
    const StructureReport r = decompose(inst.s);
    for (const MinimalIdeal& m : r.minimal_ideals) {
      upper.add(std::max(0.0, m.g.norm() - inst.s.op_norm()));
      lower.add(std::max(0.0, 1.0 / bound(inst.s) - m.e.norm()));
    }
  }
  return combine({{&upper, "||g|| excess"}, {&lower, "||e|| deficit"}},
                 static_cast<int>(fam.size()));
}

Outcome hstar(const std::vector<testing::FrobeniusInstance>& fam) {
  Rng rng(kSeed + 7);
  Worst w{1e-8};
  const std::size_t count = std::min<std::size_t>(100, fam.size());
  for (std::size_t t = 0; t < count; ++t) {
    const HilbSemigroup& s = fam[t].s;
    const Eigen::Index n = s.size();
    const CVec u = testing::random_vector(rng, n);
    const CMat left = mult_operator(s, u);
    const CMat right = mult_operator(s, hstar_adjoint(s, u));
    // Basis vectors have unit norm, so the bound is 1e-8 ||u||.
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        w.add(std::abs(left(k, j) - std::conj(right(j, k))) / u.norm());
  }
  return combine({{&w, "normalized residual"}}, static_cast<int>(count));
}

Outcome bisemigroup() {
  Rng rng(kSeed + 8);
  int disagreements = 0, unit_norm = 0;
  for (int t = 0; t < kCases; ++t) {
    const auto inst = testing::random_mixed_norm_instance(rng);
    const AxiomReport a = check_axioms(inst.s);
    bool all_unit = true;
    for (const CVec& g : group_likes(inst.s))
      all_unit = all_unit && std::abs(g.norm() - 1.0) <= 1e-8;
    unit_norm += all_unit;
    if (a.bisemigroup.ok != a.comult_partial_isometry.ok ||
        a.bisemigroup.ok != all_unit)
      ++disagreements;
  }
  Outcome o;
  o.pass = disagreements == 0;
  o.detail = std::to_string(kCases) + " cases (" + std::to_string(unit_norm) +
             " with unit-norm group-likes), " + std::to_string(disagreements) +
             " disagreements";
  return o;
}

Outcome functor_round_trips() {
  Rng rng(kSeed + 9);
  Worst weight{1e-9}, tensor{1e-8};
  int label_failures = 0;
  for (int t = 0; t < kCases; ++t) {
    const WPointedSet x = testing::random_pointed_set(rng, 6, 0.25, 16.0);
    const WSetMorphism e = epsilon(x);
    const PointedIsoCheck iso = pointed_iso_check(e);
    if (!iso.bijective) ++label_failures;
    weight.add(iso.weight_residual);
    const RoundTripReport r = round_trips(x);
    tensor.add(r.phi_tensor_residual);
    tensor.add(r.jperp_closure_residual);
  }
  return combine({{&weight, "epsilon weight"}, {&tensor, "Phi tensor"}},
                 kCases, label_failures);
}

Outcome epilogue() {
  Worst trace{1e-8};
  int failures = 0, cases = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t x0 = 0; x0 < n; ++x0) {
      ++cases;
      const HilbSemigroup s = epilogue_semigroup(n, x0);
      const AxiomReport a = check_axioms(s);
      if (!a.special.ok || !a.frobenius()) ++failures;
      if ((n >= 2) == a.commutative.ok) ++failures;
      if (!annihilator(s).empty()) ++failures;
      const auto nn = static_cast<Eigen::Index>(n);
      const std::vector<CVec> expected = orthogonal_complement(
          {CVec::Unit(nn, static_cast<Eigen::Index>(x0))}, nn);
      trace.add(subspace_distance(radical_trace_oracle(s), expected, nn));
    }
  return combine({{&trace, "trace radical"}}, cases, failures);
}

Outcome oracle_concordance(
    const std::vector<testing::FrobeniusInstance>& fam) {
  Worst w{1e-7};
  int cases = 0;
  auto add = [&](const HilbSemigroup& s) {
    ++cases;
    w.add(subspace_distance(radical(s), radical_trace_oracle(s), s.size()));
  };
  for (const auto& inst : fam) add(inst.s);
  Rng rng(kSeed + 11);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = testing::uniform_index(rng, 1, 8);
    add(from_orthogonal_set(testing::random_orthogonal_set(
        rng, n, testing::uniform_index(rng, 0, n))));
  }
  for (std::size_t n = 0; n <= 8; ++n) add(zero_semigroup(n));
  return combine({{&w, "angle"}}, cases);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto family = frobenius_family(kCases, kSeed + 3);

  struct Row {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Row> rows = {
      {1, "axiom suite", axiom_suite},
      {2, "dictionary bijection", dictionary_bijection},
      {3, "structure theorem", [&] { return structure_theorem(family); }},
      {4, "semisimplicity equivalences", [&] { return semisimplicity(family); }},
      {5, "unit criterion", [&] { return unit_criterion(family); }},
      {6, "norm bound", [&] { return norm_bound(family); }},
      {7, "H*-adjoint", [&] { return hstar(family); }},
      {8, "bisemigroup / partial isometry", bisemigroup},
      {9, "functor round trips", functor_round_trips},
      {10, "epilogue regression", epilogue},
      {11, "oracle concordance", [&] { return oracle_concordance(family); }},
  };

  int failed = 0;
  for (const Row& r : rows) {
    Outcome o;
    try {
      o = r.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2d %-32s %s\n", o.pass ? "PASS" : "FAIL", r.id, r.name,
                o.detail.c_str());
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::printf("%d/%zu criteria passed in %.1f s\n",
              static_cast<int>(rows.size()) - failed, rows.size(), secs);
  return failed == 0 ? 0 : 1;
}

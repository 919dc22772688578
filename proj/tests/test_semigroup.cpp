#include <catch2/catch.hpp>

#include "frobenius/constructors.hpp"
#include "frobenius/error.hpp"
#include "frobenius/semigroup.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace frob;
using frob::testing::Rng;

namespace {

HilbSemigroup pointwise(std::size_t n) {
  return weighted_semigroup(
      [&] {
        WeightSpec w;
        for (std::size_t i = 0; i < n; ++i) {
          w.points.push_back("x" + std::to_string(i));
          w.weights[w.points.back()] = 1.0;
        }
        return w;
      }());
}

CVec basis(Eigen::Index n, Eigen::Index i) { return CVec::Unit(n, i); }

HilbSemigroup random_tensor(Rng& rng, std::size_t n, bool symmetric) {
  const CMat m = testing::random_matrix(rng, static_cast<Eigen::Index>(n),
                                        static_cast<Eigen::Index>(n * n));
  MultTensor t = MultTensor::from_fn(n, [&](std::size_t i, std::size_t j,
                                            std::size_t k) {
    const auto a = static_cast<Eigen::Index>(i * n + j);
    const auto b = static_cast<Eigen::Index>(j * n + i);
    return symmetric ? m(static_cast<Eigen::Index>(k), std::min(a, b))
                     : m(static_cast<Eigen::Index>(k), a);
  });
  return HilbSemigroup::new_unchecked(std::move(t));
}

}  // namespace

TEST_CASE("multiply examples") {
  const HilbSemigroup p = pointwise(2);
  CHECK((multiply(p, basis(2, 0), basis(2, 0)) - basis(2, 0)).norm() == 0.0);
  Rng rng(1);
  const CVec u = testing::random_vector(rng, 2);
  CHECK(multiply(p, u, CVec::Zero(2)).isZero());

  const HilbSemigroup e = epilogue_semigroup(2, 0);
  const CVec v = testing::random_vector(rng, 2);
  CHECK((multiply(e, u, v) - v(0) * u).norm() < 1e-14);
  CHECK_THROWS_AS(multiply(p, CVec::Zero(3), u), DimensionError);
}

TEST_CASE("multiply follows the tensor formula") {
  Rng rng(2);
  const HilbSemigroup s = random_tensor(rng, 3, false);
  const CVec u = testing::random_vector(rng, 3), v = testing::random_vector(rng, 3);
  CVec w = CVec::Zero(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        w(static_cast<Eigen::Index>(k)) += u(static_cast<Eigen::Index>(i)) *
                                           v(static_cast<Eigen::Index>(j)) *
                                           s.tensor()(i, j, k);
  CHECK((multiply(s, u, v) - w).norm() < 1e-12);
}

TEST_CASE("comultiply examples") {
  const HilbSemigroup p = pointwise(2);
  CHECK((comultiply(p, basis(2, 0)) - kron(basis(2, 0), basis(2, 0))).norm() ==
        0.0);
  Rng rng(3);
  const CVec u = testing::random_vector(rng, 3);
  CHECK(comultiply(zero_semigroup(3), u).isZero());
  const HilbSemigroup e = epilogue_semigroup(3, 1);
  CHECK((comultiply(e, u) - kron(u, basis(3, 1))).norm() < 1e-14);
  CHECK_THROWS_AS(comultiply(e, CVec::Zero(2)), DimensionError);
}

TEST_CASE("multiplication and comultiplication are adjoint") {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = testing::uniform_index(rng, 1, 5);
    const HilbSemigroup s = random_tensor(rng, n, false);
    const auto nn = static_cast<Eigen::Index>(n);
    const CVec u = testing::random_vector(rng, nn), v = testing::random_vector(rng, nn),
               w = testing::random_vector(rng, nn);
    const Complex lhs = inner(multiply(s, u, v), w);
    const Complex rhs = inner(kron(u, v), comultiply(s, w));
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("check_axioms examples") {
  const AxiomReport p = check_axioms(pointwise(3));
  CHECK(p.associative.ok);
  CHECK(p.commutative.ok);
  CHECK(p.frobenius_top.ok);
  CHECK(p.frobenius_bottom.ok);
  CHECK(p.special.ok);
  CHECK(p.comult_partial_isometry.ok);
  CHECK(p.bisemigroup.ok);
  CHECK(p.op_norm == Approx(1.0));

  const AxiomReport z = check_axioms(zero_semigroup(3));
  CHECK(z.associative.ok);
  CHECK(z.commutative.ok);
  CHECK(z.frobenius());
  CHECK_FALSE(z.special.ok);
  CHECK(z.special.residual == Approx(1.0));

  for (std::size_t n = 2; n <= 4; ++n) {
    const AxiomReport e = check_axioms(epilogue_semigroup(n, n - 1));
    CHECK(e.frobenius());
    CHECK(e.special.ok);
    CHECK_FALSE(e.commutative.ok);
  }
}

TEST_CASE("associativity residual brackets the associator entries") {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = testing::uniform_index(rng, 1, 4);
    const HilbSemigroup s = random_tensor(rng, n, false);
    const MultTensor& m = s.tensor();
    double max_entry = 0.0, frob2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t k = 0; k < n; ++k) {
            Complex a = 0.0;
            for (std::size_t p = 0; p < n; ++p)
              a += m(i, j, p) * m(p, l, k) - m(j, l, p) * m(i, p, k);
            max_entry = std::max(max_entry, std::abs(a));
            frob2 += std::norm(a);
          }
    const double r = associativity_residual(s);
    CHECK(r >= max_entry - 1e-12);
    CHECK(r <= std::sqrt(frob2) + 1e-12);
  }
}

TEST_CASE("new_checked rejects non-associative tensors") {
  Rng rng(7);
  const HilbSemigroup bad = random_tensor(rng, 2, false);
  try {
    HilbSemigroup::new_checked(bad.tensor());
    FAIL("expected AxiomError");
  } catch (const AxiomError& e) {
    CHECK(e.axiom() == "associative");
    CHECK(e.residual() > e.threshold());
  }
  CHECK_NOTHROW(HilbSemigroup::new_checked(pointwise(3).tensor()));
  CHECK_THROWS(HilbSemigroup::new_unchecked(MultTensor(1), 0.0));
}

TEST_CASE("mult_operator examples") {
  const CMat m = mult_operator(pointwise(3), basis(3, 0));
  CMat expected = CMat::Zero(3, 3);
  expected(0, 0) = 1.0;
  CHECK((m - expected).norm() == 0.0);
  CHECK(mult_operator(pointwise(3), CVec::Zero(3)).isZero());

  Rng rng(8);
  const CVec u = testing::random_vector(rng, 3);
  const CMat e = mult_operator(epilogue_semigroup(3, 2), u);
  CHECK((e - u * basis(3, 2).transpose()).norm() < 1e-14);
  CHECK(numerical_rank(e) <= 1);
}

TEST_CASE("normality of multiplication operators") {
  CHECK(check_normal_multiplications(zero_semigroup(3)).residual == 0.0);
  MultTensor nil = MultTensor::from_fn(2, [](std::size_t i, std::size_t j,
                                             std::size_t k) -> Complex {
    return (i == 0 && j == 0 && k == 1) ? 1.0 : 0.0;
  });
  const Check c =
      check_normal_multiplications(HilbSemigroup::new_unchecked(nil));
  CHECK_FALSE(c.ok);
  CHECK(c.residual == Approx(1.0));

  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto inst = testing::random_frobenius(rng);
    const Check n = check_normal_multiplications(inst.s);
    CHECK(n.ok);
    CHECK(n.residual <= 10 * inst.s.threshold(2));
  }
}

TEST_CASE("bound examples") {
  CHECK(bound(zero_semigroup(2)) == 1.0);
  CHECK(bound(pointwise(3)) == Approx(1.0));
  const OrthogonalSet x(1, {CVec::Constant(1, 2.0)});
  CHECK(bound(from_orthogonal_set(x)) == Approx(2.0));
}

TEST_CASE("Frobenius cells agree on commutative inputs") {
  Rng rng(10);
  for (int t = 0; t < 40; ++t) {
    const HilbSemigroup s = random_tensor(rng, testing::uniform_index(rng, 1, 4), true);
    REQUIRE(commutativity_residual(s) < 1e-12);
    CHECK(std::abs(frobenius_top_residual(s) - frobenius_bottom_residual(s)) <
          1e-10 * std::max(1.0, frobenius_top_residual(s)));
  }
  for (int t = 0; t < 40; ++t) {
    const HilbSemigroup s = testing::random_frobenius(rng).s;
    CHECK(std::abs(frobenius_top_residual(s) - frobenius_bottom_residual(s)) <
          1e-10);
  }
}

TEST_CASE("special implies partial isometry; bisemigroup iff partial isometry") {
  Rng rng(12);
  for (int t = 0; t < 60; ++t) {
    const auto inst = testing::random_mixed_norm_instance(rng, 6);
    const AxiomReport r = check_axioms(inst.s);
    REQUIRE(r.frobenius());
    if (r.special.ok) CHECK(r.comult_partial_isometry.ok);
    CHECK(r.bisemigroup.ok == r.comult_partial_isometry.ok);
  }
  const AxiomReport e = check_axioms(epilogue_semigroup(3, 0));
  CHECK(e.comult_partial_isometry.ok);
}

TEST_CASE("Check marginal band") {
  CHECK(Check::against(5e-9, 1e-9).marginal());
  CHECK(Check::against(5e-10, 1e-9).marginal());
  CHECK_FALSE(Check::against(1e-12, 1e-9).marginal());
  CHECK_FALSE(Check::against(1.0, 1e-9).marginal());
}

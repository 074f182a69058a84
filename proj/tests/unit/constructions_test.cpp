#include <bit>
#include <random>

#include "gtest/gtest.h"

#include "frobcat/constructions/constructions.hpp"
#include "frobcat/error.hpp"
#include "frobcat/exactla/linalg.hpp"
#include "frobcat/frobenius/frobenius.hpp"
#include "support/algebras.hpp"
#include "support/objects.hpp"
#include "support/random_matrix.hpp"

namespace frobcat {
namespace {

using testing::associative_oracle;
using testing::poly_quotient;
using testing::random_rational;
using testing::truncated;
using testing::z2_signs;

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Product of monomials for a diagonal form: generators anticommute, w_i² =
// B_ii, so w_S w_T = (−1)^{#{s∈S, t∈T, s>t}} Π_{i∈S∩T} B_ii w_{SΔT}.
Rational diagonal_clifford_coef(unsigned s, unsigned t, const Matrix& b) {
  int inversions = 0;
  for (unsigned i = 0; i < 8; ++i)
    for (unsigned j = 0; j < i; ++j)
      if ((s >> i & 1) && (t >> j & 1)) ++inversions;
  Rational c = inversions % 2 ? -1 : 1;
  for (unsigned i = 0; i < 8; ++i)
    if (s & t & (1u << i)) c *= b(i, i);
  return c;
}

void expect_diagonal_clifford(const AlgObj& a, std::size_t m, const Matrix& b) {
  const auto order = monomial_order(m);
  const std::size_t d = order.size();
  std::vector<std::size_t> index(d);
  for (std::size_t i = 0; i < d; ++i) index[order[i]] = i;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Matrix expected(d, 1);
      expected(index[order[x] ^ order[y]], 0) = diagonal_clifford_coef(order[x], order[y], b);
      EXPECT_EQ(a.m.block(0, x * d + y, d, 1), expected) << x << " " << y;
    }
}

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) b(i, j) = b(j, i) = random_rational(rng, 2);
  return b;
}

TEST(MonomialOrder, ByLengthThenValue) {
  EXPECT_EQ(monomial_order(3), (std::vector<unsigned>{0, 1, 2, 4, 3, 5, 6, 7}));
  EXPECT_EQ(monomial_order(0), (std::vector<unsigned>{0}));
}

TEST(ExteriorAlgebra, Examples) {
  const GradedAlg zero = exterior_algebra(Obj::trivial(vec_hopf(), 0));
  EXPECT_EQ(zero.total.m, unit_algebra(vec_hopf()).m);
  EXPECT_EQ(zero.dims, (std::vector<std::size_t>{1}));
  ASSERT_TRUE(zero.total.comult);
  EXPECT_EQ(*zero.total.comult, Matrix{{1}});

  const GradedAlg two = exterior_algebra(Obj::trivial(vec_hopf(), 2));
  EXPECT_EQ(two.dims, (std::vector<std::size_t>{1, 2, 1}));
  const Matrix x1 = Matrix::unit_column(4, 1), x2 = Matrix::unit_column(4, 2);
  EXPECT_EQ(multiply(two.total, x1, x2), Matrix::unit_column(4, 3));
  EXPECT_EQ(multiply(two.total, x2, x1), -Matrix::unit_column(4, 3));
  EXPECT_TRUE(multiply(two.total, x1, x1).is_zero());
  EXPECT_TRUE(check_algebra(two.total).ok());
  EXPECT_TRUE(check_graded_algebra(two).ok());
}

TEST(ExteriorAlgebra, SwapActionExtends) {
  const HopfPtr z2 = group_algebra(Group::cyclic(2));
  const Obj swap(z2, {Matrix::identity(2), Matrix{{0, 1}, {1, 0}}});
  const GradedAlg b = exterior_algebra(swap);
  // 1 ↦ 1, x1 ↔ x2, x1x2 ↦ x2x1 = −x1x2.
  EXPECT_EQ(b.total.carrier.act(1), (Matrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}));
  EXPECT_TRUE(check_algebra(b.total).ok());
  // The top is the sign line, so no invariant form sees it.
  EXPECT_FALSE(b.total.comult);
  EXPECT_FALSE(frobenius_detect(b.total).frobenius);
}

TEST(ExteriorAlgebra, BlockRanksAreBinomial) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const GradedAlg b = exterior_algebra(Obj::trivial(vec_hopf(), n));
    const auto cert = frobenius_detect(b.total);
    ASSERT_TRUE(cert.frobenius);
    const auto report = graded_frobenius_structure_check(b, cert);
    EXPECT_TRUE(report.checks.ok());
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i <= n; ++i) expected.push_back(binomial(n, i));
    EXPECT_EQ(report.block_ranks, expected);
    EXPECT_EQ(b.dims, expected);
  }
}

TEST(ExteriorAlgebra, OddSpaceInSmashCategory) {
  const HopfPtr smash = lambda_smash(Group::cyclic(2), 1, {Matrix::identity(2), -Matrix::identity(2)});
  const Obj w = testing::smash_module(smash, {Matrix::identity(2), -Matrix::identity(2)},
                                      {Matrix(2, 2), Matrix(2, 2)});
  const GradedAlg b = exterior_algebra(w);
  EXPECT_TRUE(check_algebra(b.total).ok());
  EXPECT_TRUE(frobenius_detect(b.total).frobenius);  // even top x1x2
}

TEST(ExteriorAlgebra, RejectsActionsThatDoNotDescend) {
  // W = span(v0 even, v1 odd) with the odd generator sending v1 to v0:
  // w·(v1 v1) = v0 v1 − v1 v0 = 2 v0 v1 although v1 v1 = 0.
  const HopfPtr smash = lambda_smash(Group::cyclic(2), 1, {Matrix{{1}}, Matrix{{-1}}});
  const Obj w = testing::smash_module(smash, {Matrix::identity(2), Matrix{{1, 0}, {0, -1}}},
                                      {Matrix{{0, 1}, {0, 0}}});
  ASSERT_TRUE(check_module(w).ok());
  EXPECT_THROW(exterior_algebra(w), PreconditionViolation);
}

TEST(CliffordAlgebra, Examples) {
  const Obj w1 = Obj::trivial(vec_hopf(), 1);
  const FilteredAlg one = clifford_algebra(w1, make_bilinear_form(w1, Matrix{{1}}));
  EXPECT_EQ(one.algebra.m, poly_quotient({-1, 0}).m);
  EXPECT_EQ(one.filtration.steps, (std::vector<Matrix>{Matrix{{1}, {0}}, Matrix::identity(2)}));

  const Obj w2 = Obj::trivial(vec_hopf(), 2);
  const FilteredAlg two = clifford_algebra(w2, make_bilinear_form(w2, Matrix::identity(2)));
  expect_diagonal_clifford(two.algebra, 2, Matrix::identity(2));
  const Matrix x1 = Matrix::unit_column(4, 1), x2 = Matrix::unit_column(4, 2);
  EXPECT_EQ(multiply(two.algebra, x1, x1), Matrix::unit_column(4, 0));
  EXPECT_EQ(multiply(two.algebra, x2, x1), -multiply(two.algebra, x1, x2));
  EXPECT_TRUE(is_connected(two));

  const Matrix diag{{2, 0, 0}, {0, -1, 0}, {0, 0, Rational(1, 3)}};
  const Obj w3 = Obj::trivial(vec_hopf(), 3);
  expect_diagonal_clifford(clifford_algebra(w3, make_bilinear_form(w3, diag)).algebra, 3, diag);
}

TEST(CliffordAlgebra, ZeroFormIsExterior) {
  for (std::size_t n = 0; n <= 3; ++n) {
    const Obj w = Obj::trivial(vec_hopf(), n);
    const FilteredAlg cl = clifford_algebra(w, make_bilinear_form(w, Matrix(n, n)));
    const FilteredAlg ext = trivial_filtration(exterior_algebra(w));
    EXPECT_EQ(cl.algebra.m, ext.algebra.m);
    EXPECT_EQ(cl.filtration.steps, ext.filtration.steps);
  }
}

TEST(CliffordAlgebra, RandomFormsDeformExterior) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Obj w = Obj::trivial(vec_hopf(), n);
    const FilteredAlg cl = clifford_algebra(w, make_bilinear_form(w, random_symmetric(rng, n)));
    EXPECT_TRUE(associative_oracle(cl.algebra));
    EXPECT_TRUE(check_filtered_algebra(cl).ok());
    EXPECT_TRUE(is_connected(cl));
    const auto g = clifford_gr_isomorphism(w, cl);
    EXPECT_TRUE(g.report.ok());
    EXPECT_EQ(g.graded.graded.dims, g.exterior.dims);
    EXPECT_EQ(lift_frobenius(cl).outcome, LiftOutcome::lifted);
  }
}

TEST(CliffordAlgebra, EquivariantFormOnAGroupModule) {
  // Z/2 swapping two generators preserves the identity form.
  const HopfPtr z2 = group_algebra(Group::cyclic(2));
  const Obj swap(z2, {Matrix::identity(2), Matrix{{0, 1}, {1, 0}}});
  const FilteredAlg cl = clifford_algebra(swap, make_bilinear_form(swap, Matrix::identity(2)));
  EXPECT_TRUE(check_filtered_algebra(cl).ok());
  EXPECT_TRUE(clifford_gr_isomorphism(swap, cl).report.ok());
}

TEST(BilinearForm, Rejections) {
  const Obj w = Obj::trivial(vec_hopf(), 2);
  EXPECT_THROW(make_bilinear_form(w, Matrix{{0, 1}, {0, 0}}), MalformedInput);
  EXPECT_THROW(make_bilinear_form(w, Matrix{{1}}), MalformedInput);
  const HopfPtr z2 = group_algebra(Group::cyclic(2));
  const Obj signs = z2_signs(z2, {1, -1});
  EXPECT_THROW(make_bilinear_form(signs, Matrix{{0, 1}, {1, 0}}), PreconditionViolation);
  EXPECT_NO_THROW(make_bilinear_form(signs, Matrix{{1, 0}, {0, 1}}));
}

TEST(TruncatedPoly, Examples) {
  EXPECT_EQ(truncated_poly(1).total.m, unit_algebra(vec_hopf()).m);
  const GradedAlg three = truncated_poly(3);
  EXPECT_EQ(three.dims, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(three.total.m, truncated(3).m);
  EXPECT_TRUE(check_graded_algebra(three).ok());
  ASSERT_TRUE(three.total.counit);
  EXPECT_EQ(*three.total.counit, (Matrix{{0, 0, 1}}));
  EXPECT_TRUE(check_algebra(three.total).ok());

  const AlgObj dual = dual_numbers();
  EXPECT_TRUE(copairing_check(dual, Matrix{{0, 1}}));
  EXPECT_FALSE(copairing_check(dual, Matrix{{1, 0}}));
  EXPECT_THROW(truncated_poly(0), MalformedInput);
}

TEST(MatrixFrobenius, Examples) {
  const AlgObj one = matrix_frobenius(1, Obj::trivial(vec_hopf(), 1));
  EXPECT_EQ(*one.comult, Matrix{{1}});

  const AlgObj two = matrix_frobenius(2, Obj::trivial(vec_hopf(), 2));
  // Basis E11, E12, E21, E22.
  Matrix d11(16, 1);
  d11(0 * 4 + 0, 0) = 1;
  d11(1 * 4 + 2, 0) = 1;
  EXPECT_EQ(two.comult->block(0, 0, 16, 1), d11);
  EXPECT_EQ(*two.counit, (Matrix{{1, 0, 0, 1}}));
  EXPECT_TRUE(check_algebra(two).ok());
  EXPECT_FALSE(is_commutative(two));

  // (m⊗id)(id⊗Δ) and Δm on E12⊗E21 entrywise: both give Σ_k E1k⊗Ek1.
  const Matrix id = Matrix::identity(4);
  const Matrix x = kron(Matrix::unit_column(4, 1), Matrix::unit_column(4, 2));
  const Matrix lhs = kron(two.m, id) * kron(id, *two.comult) * x;
  const Matrix rhs = *two.comult * two.m * x;
  Matrix expected(16, 1);
  expected(0 * 4 + 0, 0) = 1;
  expected(1 * 4 + 2, 0) = 1;
  EXPECT_EQ(lhs, expected);
  EXPECT_EQ(rhs, expected);

  EXPECT_THROW(matrix_frobenius(3, Obj::trivial(vec_hopf(), 2)), MalformedInput);
}

TEST(UpperTriangular, IsAnAlgebra) {
  const AlgObj a = upper_triangular_2();
  EXPECT_TRUE(check_algebra(a).ok());
  EXPECT_TRUE(associative_oracle(a));
}

TEST(RepresentingAlgebra, TrivialInput) {
  const RepresentingData data{Group::trivial(), {0}, std::nullopt, 0, {Matrix(0, 0)}, Matrix(0, 0), {Matrix{{1}}}};
  const auto r = representing_algebra(data);
  EXPECT_EQ(r.algebra.dim(), 1u);
  EXPECT_TRUE(frobenius_detect(r.algebra).frobenius);
}

TEST(RepresentingAlgebra, MinimalSuperCase) {
  const auto r = representing_algebra(etingof_ostrik_min());
  ASSERT_EQ(r.algebra.dim(), 4u);
  EXPECT_TRUE(check_algebra(r.algebra).ok());
  // Basis e_c⊗x^i at index 2c + i, with e_0, e_1 the coset idempotents. The
  // odd braiding moves the idempotent past x: (e_c⊗x^i)(e_d⊗x^j) =
  // δ(c, d + i) e_c⊗x^{i+j}, with x² = 1.
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t d = 0; d < 2; ++d)
        for (std::size_t j = 0; j < 2; ++j) {
          Matrix expected(4, 1);
          if (c == (d + i) % 2) expected(2 * c + (i + j) % 2, 0) = 1;
          EXPECT_EQ(r.algebra.m.block(0, (2 * c + i) * 4 + 2 * d + j, 4, 1), expected);
        }
  const auto cert = frobenius_detect(r.algebra);
  EXPECT_TRUE(cert.frobenius);
  // The Clifford factor alone is Frobenius, its associated graded is not.
  EXPECT_TRUE(frobenius_detect(r.clifford).frobenius);
}

TEST(RepresentingAlgebra, KleinFourCases) {
  const Group v4 = Group::product(Group::cyclic(2), Group::cyclic(2));
  // Element (a, b) has index 2a + b; u = (0, 1) acts by −1 on W.
  const std::vector<Matrix> w{Matrix{{1}}, Matrix{{-1}}, Matrix{{1}}, Matrix{{-1}}};
  const RepresentingData trivial_h{v4, {0}, std::nullopt, 1, w, Matrix{{1}}, {Matrix{{1}}}};
  const auto eight = representing_algebra(trivial_h);
  EXPECT_EQ(eight.algebra.dim(), 8u);
  EXPECT_TRUE(frobenius_detect(eight.algebra).frobenius);

  const RepresentingData first_factor{v4, {0, 2}, std::nullopt, 1, w, Matrix{{1}}, {Matrix{{1}}, Matrix{{1}}}};
  const auto four = representing_algebra(first_factor);
  EXPECT_EQ(four.algebra.dim(), 4u);
  EXPECT_TRUE(frobenius_detect(four.algebra).frobenius);
}

TEST(RepresentingAlgebra, TwistedV) {
  // Z/2×Z/2 has a nontrivial cocycle class; over ℚ its projective
  // representation needs only the Pauli matrices X and Z.
  const Group v4 = Group::product(Group::cyclic(2), Group::cyclic(2));
  const Matrix x{{0, 1}, {1, 0}}, z{{1, 0}, {0, -1}};
  const std::vector<Matrix> sigma{Matrix::identity(2), z, x, x * z};
  CocycleTable psi(4, std::vector<Rational>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      // σ(a)σ(b) = ψ(a, b) σ(ab) read off the matrices.
      const Matrix prod = sigma[a] * sigma[b], target = sigma[v4.mul(a, b)];
      psi[a][b] = prod(0, 0) != 0 ? prod(0, 0) / target(0, 0) : prod(0, 1) / target(0, 1);
    }
  const RepresentingData data{v4, {0, 1, 2, 3}, psi, 0, std::vector<Matrix>(4, Matrix(0, 0)), Matrix(0, 0), sigma};
  const auto r = representing_algebra(data);
  EXPECT_EQ(r.algebra.dim(), 4u);
  EXPECT_TRUE(frobenius_detect(r.algebra).frobenius);
}

TEST(RepresentingAlgebra, HypothesisViolations) {
  auto data = etingof_ostrik_min();
  data.w_action = {Matrix{{1}}, Matrix{{1}}};
  EXPECT_THROW(representing_algebra(data), PreconditionViolation);

  const RepresentingData bad_u{Group::cyclic(4), {0}, std::nullopt, 1, std::vector<Matrix>(4, Matrix(0, 0)),
                               Matrix(0, 0), {Matrix{{1}}}};
  EXPECT_THROW(representing_algebra(bad_u), PreconditionViolation);

  const RepresentingData bad_h{Group::cyclic(4), {0, 1}, std::nullopt, 0, std::vector<Matrix>(4, Matrix(0, 0)),
                               Matrix(0, 0), {Matrix{{1}}, Matrix{{1}}}};
  EXPECT_THROW(representing_algebra(bad_h), PreconditionViolation);
}

TEST(Builtins, AllExamplesBuild) {
  for (const auto& name : builtin_examples()) {
    const FilteredAlg a = builtin(name);
    EXPECT_TRUE(check_filtered_algebra(a).ok()) << name;
  }
  EXPECT_EQ(gr(builtin("clifford:2:identity")).graded.dims, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(builtin("exterior:3").algebra.dim(), 8u);
  EXPECT_EQ(builtin("matn:2").filtration.steps.size(), 1u);
  EXPECT_THROW(builtin("exterior"), MalformedInput);
  EXPECT_THROW(builtin("exterior:x"), MalformedInput);
  EXPECT_THROW(builtin("nonsense"), MalformedInput);
}

}  // namespace
}  // namespace frobcat

#include <random>

#include "gtest/gtest.h"

#include "frobcat/error.hpp"
#include "frobcat/exactla/linalg.hpp"
#include "frobcat/exactla/multipoly.hpp"
#include "support/random_matrix.hpp"

namespace frobcat {
namespace {

using testing::leibniz_det;
using testing::random_matrix;
using testing::random_rational;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(to_string(parse_rational("6/3")), "2");
  EXPECT_EQ(to_string(parse_rational("-2/6")), "-1/3");
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("--1"), ParseError);
}

TEST(Rref, Examples) {
  auto r = rref(Matrix{{1, 2}, {2, 4}});
  EXPECT_EQ(r.reduced, (Matrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});

  r = rref(Matrix::identity(3));
  EXPECT_EQ(r.reduced, Matrix::identity(3));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));

  r = rref(Matrix::zero(2, 2));
  EXPECT_TRUE(r.reduced.is_zero());
  EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, IdempotentAndRankNullity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    const Matrix m = random_matrix(rng, rows, cols);
    const auto once = rref(m);
    const auto twice = rref(once.reduced);
    EXPECT_EQ(once.reduced, twice.reduced);
    EXPECT_EQ(once.pivots, twice.pivots);
    for (std::size_t i = 1; i < once.pivots.size(); ++i) {
      EXPECT_LT(once.pivots[i - 1], once.pivots[i]);
    }
    const Matrix k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.cols(), cols);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
  }
}

TEST(KernelBasis, Examples) {
  Matrix k = kernel_basis(Matrix{{1, 1}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k(0, 0), -k(1, 0));
  EXPECT_NE(k(0, 0), 0);

  EXPECT_EQ(kernel_basis(Matrix::identity(2)).cols(), 0u);

  // Hand oracle: x + 2y = 0 is spanned by (-2, 1).
  k = kernel_basis(Matrix{{1, 2}, {2, 4}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k, (Matrix{{-2}, {1}}));
}

TEST(Solve, Examples) {
  auto x = solve(Matrix::identity(2), Matrix{{3}, {5}});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Matrix{{3}, {5}}));

  x = solve(Matrix{{1, 1}}, Matrix{{2}});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)(0, 0) + (*x)(1, 0), 2);

  // x + 2y = 1 and 2x + 4y = 0 cannot both hold.
  EXPECT_FALSE(solve(Matrix{{1, 2}, {2, 4}}, Matrix{{1}, {0}}));
  EXPECT_THROW(solve(Matrix::identity(2), Matrix{{1}}), MalformedInput);
}

TEST(Solve, RandomConsistentSystems) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
    const Matrix x0 = random_matrix(rng, m.cols(), 1);
    const Matrix b = m * x0;
    auto x = solve(m, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(m * *x, b);
  }
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(4));
  EXPECT_EQ(kron(Matrix{{2}}, Matrix{{3}}), Matrix{{6}});
  // Left factor index is the major one.
  EXPECT_EQ(kron(Matrix{{1}, {0}}, Matrix{{0}, {1}}), (Matrix{{0}, {1}, {0}, {0}}));
}

TEST(Kron, MixedProductAndAssociativity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    const Matrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
    // Oracle: entry (i,k),(j,l) of kron(A,B) is A(i,j)·B(k,l).
    const Matrix ab = kron(a, b);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          for (std::size_t l = 0; l < 2; ++l) EXPECT_EQ(ab(2 * i + k, 2 * j + l), a(i, j) * b(k, l));
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));

    const Matrix x = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    const Matrix y = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    const Matrix z = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    EXPECT_EQ(kron(kron(x, y), z), kron(x, kron(y, z)));
  }
}

TEST(Determinant, MatchesLeibnizFormula) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix m = random_matrix(rng, n, n);
    EXPECT_EQ(determinant(m), leibniz_det(m));
    auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), sgn(determinant(m)) != 0);
    if (inv) {
      EXPECT_EQ(m * *inv, Matrix::identity(n));
    }
  }
  EXPECT_EQ(determinant(Matrix(0, 0)), 1);
}

TEST(SymbolicDet, Examples) {
  const std::vector<Matrix> diagonal{Matrix{{1, 0}, {0, 0}}, Matrix{{0, 0}, {0, 1}}};
  MultiPoly expected(2);
  expected.add_term({1, 1}, 1);
  EXPECT_EQ(symbolic_det(diagonal), expected);
  EXPECT_EQ(symbolic_det(diagonal).to_string(), "t1*t2");

  const std::vector<Matrix> identity{Matrix::identity(2)};
  EXPECT_EQ(symbolic_det(identity).to_string(), "t1^2");

  // Cofactor expansion of [[t2, t1], [t1, 0]] gives -t1².
  const std::vector<Matrix> swap{Matrix{{0, 1}, {1, 0}}, Matrix{{1, 0}, {0, 0}}};
  MultiPoly minus_t1_sq(2);
  minus_t1_sq.add_term({2, 0}, -1);
  EXPECT_EQ(symbolic_det(swap), minus_t1_sq);
  EXPECT_EQ(symbolic_det(swap).to_string(), "-t1^2");
}

TEST(SymbolicDet, Errors) {
  const std::vector<Matrix> ragged{Matrix::identity(2), Matrix::identity(3)};
  EXPECT_THROW(symbolic_det(ragged), MalformedInput);
  const std::vector<Matrix> big{Matrix::identity(7)};
  EXPECT_THROW(symbolic_det(big), CapacityExceeded);
  EXPECT_NO_THROW(symbolic_det(big, 7));
}

TEST(SymbolicDet, AgreesWithNumericDeterminantAtRandomPoints) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 5, d = 1 + rng() % 3;
    std::vector<Matrix> pencil;
    for (std::size_t k = 0; k < d; ++k) pencil.push_back(random_matrix(rng, n, n, 3));
    const MultiPoly p = symbolic_det(pencil);
    for (int s = 0; s < 3; ++s) {
      std::vector<Rational> point;
      Matrix combo(n, n);
      for (std::size_t k = 0; k < d; ++k) {
        point.push_back(random_rational(rng, 5));
        combo += point.back() * pencil[k];
      }
      EXPECT_EQ(p.evaluate(point), leibniz_det(combo));
    }
  }
}

TEST(MultiPoly, Arithmetic) {
  const MultiPoly t1 = MultiPoly::variable(2, 0), t2 = MultiPoly::variable(2, 1);
  const MultiPoly p = (t1 + t2) * (t1 - t2);
  EXPECT_EQ(p.to_string(), "t1^2 - t2^2");
  EXPECT_EQ(p.total_degree(), 2u);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((Rational(1, 2) * t1).to_string(), "1/2*t1");
  std::vector<Rational> pt{3, 1};
  EXPECT_EQ(p.evaluate(pt), 8);
}

}  // namespace
}  // namespace frobcat

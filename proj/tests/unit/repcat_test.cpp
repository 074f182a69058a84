#include <random>

#include "gtest/gtest.h"

#include "frobcat/error.hpp"
#include "frobcat/exactla/linalg.hpp"
#include "frobcat/repcat/object.hpp"
#include "support/objects.hpp"

namespace frobcat {
namespace {

using testing::conjugate;
using testing::random_invertible;
using testing::random_matrix;
using testing::smash_module;
using testing::z2_signs;

// Permutations of {0,1,2} composed by hand: (a·b)(i) = a(b(i)).
CayleyTable s3_table_oracle() {
  const std::vector<std::array<int, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                              {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  CayleyTable t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]};
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == c) t[a][b] = k;
    }
  return t;
}

TEST(Group, RejectsNonGroups) {
  EXPECT_THROW(Group(CayleyTable{{0, 1}, {1, 1}}), MalformedInput);
  EXPECT_THROW(Group(CayleyTable{{0, 1}, {0, 1}}), MalformedInput);
  EXPECT_THROW(Group(CayleyTable{{0, 1, 2}, {1, 2, 0}}), MalformedInput);
  EXPECT_NO_THROW(Group{s3_table_oracle()});
  EXPECT_EQ(Group(s3_table_oracle()), Group::symmetric(3));
}

TEST(Group, CosetsOfSubgroup) {
  const Group z4 = Group::cyclic(4);
  CosetDecomposition cosets(z4, {0, 2});
  ASSERT_EQ(cosets.count(), 2u);
  EXPECT_EQ(cosets.rep(0), 0u);
  EXPECT_EQ(cosets.rep(1), 1u);
  // 3 + 1 = 4 = 0 + 0: lands in coset 0 with subgroup element 0.
  EXPECT_EQ(cosets.act(3, 1), (std::pair<std::size_t, std::size_t>{0, 0}));
  // 1 + 1 = 2 = 0 + 2: coset 0, subgroup element index 1.
  EXPECT_EQ(cosets.act(1, 1), (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_THROW(CosetDecomposition(z4, {0, 1}), MalformedInput);
}

TEST(ValidateHopf, GroupAlgebras) {
  EXPECT_TRUE(validate_hopf(*group_algebra(Group::trivial())).ok());
  EXPECT_EQ(vec_hopf()->dim, 1u);
  EXPECT_TRUE(validate_hopf(*group_algebra(Group::cyclic(2))).ok());
  const auto s3 = group_algebra(Group(s3_table_oracle()));
  EXPECT_EQ(s3->dim, 6u);
  EXPECT_TRUE(validate_hopf(*s3).ok());
}

TEST(ValidateHopf, SuperHopf) {
  const auto h = super_hopf();
  ASSERT_EQ(h->dim, 2u);
  const Rational half(1, 2);
  EXPECT_EQ(h->rmatrix, (Matrix{{half}, {half}, {half}, {-half}}));
  const auto report = validate_hopf(*h);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.passed("triangularity"));
}

TEST(ValidateHopf, WrongRMatrixFailsQuasitriangularity) {
  HopfData h = *group_algebra(Group::cyclic(2));
  h.rmatrix = Matrix{{0}, {0}, {0}, {1}};  // u⊗u
  const auto report = validate_hopf(h);
  EXPECT_FALSE(report.passed("quasitriangular-delta-left"));
  EXPECT_FALSE(report.ok());

  h.rmatrix = Matrix{{1}, {0}};
  EXPECT_THROW(validate_hopf(h), MalformedInput);
}

TEST(LambdaSmash, SignRepresentationOfZ2) {
  const Group z2 = Group::cyclic(2);
  const auto h = lambda_smash(z2, 1, {Matrix{{1}}, Matrix{{-1}}});
  ASSERT_EQ(h->dim, 4u);
  EXPECT_TRUE(validate_hopf(*h).ok());
  // Hand-built superalgebra: basis (1, u, w, wu).
  const std::size_t one = 0, u = 1, w = 2, wu = 3;
  auto prod = [&](std::size_t a, std::size_t b) { return h->mult.col(a * 4 + b); };
  EXPECT_EQ(prod(w, w), Matrix::zero(4, 1));
  EXPECT_EQ(prod(u, w), -Matrix::unit_column(4, wu));
  EXPECT_EQ(prod(w, u), Matrix::unit_column(4, wu));
  EXPECT_EQ(prod(u, u), Matrix::unit_column(4, one));
  Matrix delta_w(16, 1);
  delta_w(w * 4 + one, 0) = 1;
  delta_w(u * 4 + w, 0) = 1;
  EXPECT_EQ(h->comult.col(w), delta_w);
  EXPECT_EQ(h->counit, (Matrix{{1, 1, 0, 0}}));
}

TEST(LambdaSmash, ZeroOddPartIsGroupAlgebraWithRu) {
  const Group z2xz2 = Group::product(Group::cyclic(2), Group::cyclic(2));
  const auto smash = lambda_smash(z2xz2, 1, std::vector<Matrix>(4, Matrix(0, 0)));
  EXPECT_TRUE(same_category(*smash, *group_algebra(z2xz2, 1)));
  EXPECT_TRUE(validate_hopf(*smash).ok());
}

TEST(LambdaSmash, TwoDimensionalOddPart) {
  const Group z2 = Group::cyclic(2);
  const auto h = lambda_smash(z2, 1, {Matrix::identity(2), -Matrix::identity(2)});
  EXPECT_EQ(h->dim, 8u);
  EXPECT_TRUE(validate_hopf(*h).ok());
}

TEST(LambdaSmash, RejectsInvalidData) {
  const Group s3 = Group::symmetric(3);
  // A transposition is not central.
  EXPECT_THROW(lambda_smash(s3, 1, std::vector<Matrix>(6, Matrix(0, 0))), MalformedInput);
  const Group z4 = Group::cyclic(4);
  EXPECT_THROW(lambda_smash(z4, 1, std::vector<Matrix>(4, Matrix(0, 0))), MalformedInput);
  const Group z2 = Group::cyclic(2);
  EXPECT_THROW(lambda_smash(z2, 1, {Matrix{{1}}, Matrix{{1}}}), MalformedInput);
  EXPECT_THROW(group_algebra(z4, 1), MalformedInput);
}

TEST(Objects, ModuleAxioms) {
  EXPECT_TRUE(check_module(Obj::regular(super_hopf())).ok());
  Obj bad(group_algebra(Group::cyclic(2)), {Matrix::identity(1), Matrix{{2}}});
  EXPECT_FALSE(check_module(bad).ok());
}

TEST(IsMorphism, Examples) {
  const auto h = group_algebra(Group::cyclic(2));
  const Obj reg = Obj::regular(h);
  EXPECT_TRUE(is_morphism(identity_mor(reg)));
  EXPECT_TRUE(is_morphism({reg, reg, Matrix::zero(2, 2)}));

  // Over Λ(k¹)#kZ/2 the plain flip of X⊗X is not equivariant.
  const auto smash = lambda_smash(Group::cyclic(2), 1, {Matrix{{1}}, Matrix{{-1}}});
  const Matrix u{{1, 0}, {0, -1}}, w{{0, 0}, {1, 0}};
  const Obj x = smash_module(smash, {Matrix::identity(2), u}, {w});
  EXPECT_TRUE(check_module(x).ok());
  const Obj xx = tensor_obj(x, x);
  // Oracle: Δ(w) = w⊗1 + u⊗w acting on X⊗X.
  const Matrix w_on_xx = kron(w, Matrix::identity(2)) + kron(u, w);
  EXPECT_EQ(xx.act(2), w_on_xx);
  const Matrix flip = flip_matrix(2, 2);
  EXPECT_NE(flip * w_on_xx, w_on_xx * flip);
  EXPECT_FALSE(is_morphism({xx, xx, flip}));
  EXPECT_TRUE(is_morphism(braiding(x, x)));
}

TEST(Braiding, Examples) {
  const Obj v2 = Obj::trivial(vec_hopf(), 2), v3 = Obj::trivial(vec_hopf(), 3);
  EXPECT_EQ(braiding(v2, v3).matrix, flip_matrix(2, 3));

  const Obj odd = z2_signs(super_hopf(), {-1});
  EXPECT_EQ(braiding(odd, odd).matrix, Matrix{{-1}});
  const Obj even = z2_signs(super_hopf(), {1});
  EXPECT_EQ(braiding(odd, even).matrix, Matrix{{1}});

  const Obj x = z2_signs(super_hopf(), {1, -1});
  EXPECT_EQ(braiding(x, Obj::unit(super_hopf())).matrix, Matrix::identity(2));
}

TEST(Braiding, RejectsMixedCategories) {
  EXPECT_THROW(braiding(Obj::unit(vec_hopf()), Obj::unit(super_hopf())), CategoryMismatch);
  EXPECT_THROW(tensor_obj(Obj::unit(vec_hopf()), Obj::unit(super_hopf())), CategoryMismatch);
}

std::vector<Obj> small_objects(std::mt19937_64& rng) {
  std::vector<Obj> out;
  const auto sup = super_hopf();
  out.push_back(conjugate(z2_signs(sup, {1, -1}), random_invertible(rng, 2)));
  out.push_back(conjugate(z2_signs(sup, {-1, -1, 1}), random_invertible(rng, 3)));
  out.push_back(z2_signs(sup, {-1}));
  out.push_back(Obj::unit(sup));
  return out;
}

std::vector<Obj> smash_objects(std::mt19937_64& rng) {
  const auto smash = lambda_smash(Group::cyclic(2), 1, {Matrix{{1}}, Matrix{{-1}}});
  const Matrix u{{1, 0}, {0, -1}}, w{{0, 0}, {1, 0}};
  std::vector<Obj> out;
  out.push_back(conjugate(smash_module(smash, {Matrix::identity(2), u}, {w}),
                          random_invertible(rng, 2)));
  out.push_back(smash_module(smash, {Matrix::identity(1), Matrix{{-1}}}, {Matrix{{0}}}));
  out.push_back(smash_module(smash, {Matrix::identity(2), -u}, {w}));
  return out;
}

TEST(Braiding, SymmetryAndHexagon) {
  std::mt19937_64 rng(17);
  for (const auto& objs : {small_objects(rng), smash_objects(rng)}) {
    for (const auto& x : objs)
      for (const auto& y : objs) {
        const Mor c = braiding(x, y);
        EXPECT_TRUE(is_morphism(c));
        EXPECT_EQ(braiding(y, x).matrix * c.matrix, Matrix::identity(x.dim() * y.dim()));
        for (const auto& z : objs) {
          // c_{X,Y⊗Z} = (id_Y ⊗ c_{X,Z})(c_{X,Y} ⊗ id_Z)
          const Matrix lhs = braiding(x, tensor_obj(y, z)).matrix;
          const Matrix rhs = kron(Matrix::identity(y.dim()), braiding(x, z).matrix) *
                             kron(c.matrix, Matrix::identity(z.dim()));
          EXPECT_EQ(lhs, rhs);
          // c_{X⊗Y,Z} = (c_{X,Z} ⊗ id_Y)(id_X ⊗ c_{Y,Z})
          const Matrix lhs2 = braiding(tensor_obj(x, y), z).matrix;
          const Matrix rhs2 = kron(braiding(x, z).matrix, Matrix::identity(y.dim())) *
                              kron(Matrix::identity(x.dim()), braiding(y, z).matrix);
          EXPECT_EQ(lhs2, rhs2);
        }
      }
  }
}

Matrix random_hom(std::mt19937_64& rng, const Obj& x, const Obj& y) {
  Matrix f(y.dim(), x.dim());
  for (const auto& b : hom_space(x, y)) f += testing::random_rational(rng, 3) * b;
  return f;
}

TEST(Braiding, Naturality) {
  std::mt19937_64 rng(19);
  for (const auto& objs : {small_objects(rng), smash_objects(rng)}) {
    for (const auto& x : objs)
      for (const auto& x2 : objs)
        for (const auto& y : objs)
          for (const auto& y2 : objs) {
            const Matrix f = random_hom(rng, x, x2), g = random_hom(rng, y, y2);
            ASSERT_TRUE(is_equivariant(x, x2, f));
            EXPECT_EQ(braiding(x2, y2).matrix * kron(f, g), kron(g, f) * braiding(x, y).matrix);
          }
  }
}

TEST(Duals, UnitObject) {
  const auto d = dual_obj(Obj::unit(super_hopf()));
  EXPECT_EQ(d.left.dim(), 1u);
  EXPECT_EQ(d.ev.matrix, Matrix{{1}});
  EXPECT_EQ(d.coev.matrix, Matrix{{1}});
}

TEST(Duals, SnakeIdentitiesAndEquivariance) {
  std::mt19937_64 rng(23);
  std::vector<Obj> objs = small_objects(rng);
  for (const auto& o : smash_objects(rng)) objs.push_back(o);
  objs.push_back(Obj::regular(group_algebra(Group::cyclic(2))));
  objs.push_back(Obj::regular(group_algebra(Group::symmetric(3))));
  for (const auto& x : objs) {
    const auto d = dual_obj(x);
    const std::size_t n = x.dim();
    const Matrix ix = Matrix::identity(n);
    EXPECT_TRUE(check_module(d.left).ok());
    EXPECT_TRUE(check_module(d.right).ok());
    EXPECT_TRUE(is_morphism(d.ev));
    EXPECT_TRUE(is_morphism(d.coev));
    EXPECT_TRUE(is_morphism(d.ev_right));
    EXPECT_TRUE(is_morphism(d.coev_right));
    EXPECT_EQ(kron(ix, d.ev.matrix) * kron(d.coev.matrix, ix), ix);
    EXPECT_EQ(kron(d.ev.matrix, ix) * kron(ix, d.coev.matrix), ix);
    EXPECT_EQ(kron(d.ev_right.matrix, ix) * kron(ix, d.coev_right.matrix), ix);
    EXPECT_EQ(kron(ix, d.ev_right.matrix) * kron(d.coev_right.matrix, ix), ix);
  }
}

TEST(Duals, DoubleDualIsIsomorphic) {
  std::mt19937_64 rng(29);
  const Obj x = conjugate(z2_signs(group_algebra(Group::cyclic(2)), {1, -1}),
                          random_invertible(rng, 2));
  const Obj xx = dual_obj(dual_obj(x).left).left;
  bool found = false;
  for (const auto& f : hom_space(x, xx)) {
    if (sgn(determinant(f)) != 0) {
      found = true;
      EXPECT_TRUE(is_equivariant(x, xx, f));
    }
  }
  EXPECT_TRUE(found);
}

TEST(HomInvariants, Examples) {
  EXPECT_EQ(hom_invariants(Obj::unit(vec_hopf())), Matrix{{1}});
  const auto z2 = group_algebra(Group::cyclic(2));
  const Matrix reg = hom_invariants(Obj::regular(z2));
  ASSERT_EQ(reg.rows(), 1u);
  EXPECT_EQ(reg(0, 0), reg(0, 1));
  EXPECT_NE(reg(0, 0), 0);
  EXPECT_EQ(hom_invariants(z2_signs(z2, {-1})).rows(), 0u);
  EXPECT_EQ(hom_invariants(Obj::trivial(vec_hopf(), 3)).rows(), 3u);
}

}  // namespace
}  // namespace frobcat

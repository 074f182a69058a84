#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "frobcat/exactla/matrix.hpp"
#include "frobcat/report.hpp"
#include "frobcat/repcat/object.hpp"

namespace frobcat {

/// An algebra (A, m, u) in Rep(H), optionally with a coalgebra (Δ, ε).
struct AlgObj {
  Obj carrier;
  Matrix m;  // dim × dim²; column i·dim+j is e_i·e_j
  Matrix u;  // dim × 1
  std::optional<Matrix> comult;  // dim² × dim
  std::optional<Matrix> counit;  // 1 × dim

  std::size_t dim() const { return carrier.dim(); }
  const HopfPtr& hopf() const { return carrier.hopf(); }
  bool has_coalgebra() const { return comult.has_value(); }
};

/// Shape-checked construction; throws MalformedInput.
AlgObj make_algebra(Obj carrier, Matrix m, Matrix u, std::optional<Matrix> comult = std::nullopt,
                    std::optional<Matrix> counit = std::nullopt);

/// The unit object with Δ(1) = 1⊗1, ε = id.
AlgObj unit_algebra(const HopfPtr& hopf);

/// Product of two elements given as columns.
Matrix multiply(const AlgObj& a, const Matrix& x, const Matrix& y);
/// Matrix of y ↦ x·y.
Matrix left_mult(const AlgObj& a, const Matrix& x);
/// Matrix of y ↦ y·x.
Matrix right_mult(const AlgObj& a, const Matrix& x);

/// Associativity, unitality and equivariance of m and u; with coalgebra data
/// also coassociativity, counitality, equivariance of Δ and ε, and both
/// Frobenius compatibility identities. Throws MalformedInput on bad shapes.
ValidationReport check_algebra(const AlgObj& a);

/// m∘c_{A,A} = m for the ambient braiding.
bool is_commutative(const AlgObj& a);

/// A⊗B with m = (m_A⊗m_B)(id⊗c_{B,A}⊗id). When both factors carry coalgebra
/// data, Δ = (id⊗c_{A,B}⊗id)(Δ_A⊗Δ_B) and ε = ε_A⊗ε_B.
AlgObj tensor_algebra_of(const AlgObj& a, const AlgObj& b);

enum class Side { left, right, bi };

/// A module over an algebra in C.
struct ModuleObj {
  AlgObj algebra;
  Obj carrier;
  Side side = Side::left;
  std::optional<Matrix> left;   // dim M × (dim A · dim M): a⊗x ↦ a·x
  std::optional<Matrix> right;  // dim M × (dim M · dim A): x⊗a ↦ x·a
};

/// Action associativity and unitality for the declared sides, equivariance of
/// the actions and, for bimodules, (a·x)·b = a·(x·b).
ValidationReport check_algebra_module(const ModuleObj& mod);

/// A acting on itself by multiplication.
ModuleObj regular_module(const AlgObj& a, Side side);

/// A module with a map φ into the algebra intertwining the actions with m.
struct WeakIdeal {
  ModuleObj module;
  Matrix phi;  // dim A × dim I
};

/// φ is a morphism in C, and φ(a·x) = a·φ(x) / φ(x·a) = φ(x)·a for the
/// declared sides; module axioms are included under the "module/" prefix.
ValidationReport check_weak_ideal(const WeakIdeal& ideal);

/// φ injective.
bool is_monic(const WeakIdeal& ideal);

/// The ideal carried by the subspace spanned by the (independent) columns of
/// `basis`, with the inclusion as φ. Throws PreconditionViolation if the span
/// is not H-stable or not closed under multiplication from the given sides.
WeakIdeal ideal_from_subspace(const AlgObj& a, const Matrix& basis, Side side);

/// Column basis of the smallest H-stable two-sided ideal containing the
/// columns of `generators`.
Matrix generated_ideal(const AlgObj& a, const Matrix& generators);

struct QuotientAlgebra {
  AlgObj algebra;
  Matrix projection;  // dim A/I × dim A
  Matrix section;     // dim A × dim A/I, projection·section = id
};

/// A/I on the complement of im φ spanned by the non-pivot coordinates of its
/// reduced echelon basis, with m̄ = π m (σ⊗σ) and ū = π u. Throws
/// PreconditionViolation unless I is a valid two-sided weak ideal. Coalgebra
/// data is not carried over.
QuotientAlgebra quotient_algebra(const AlgObj& a, const WeakIdeal& ideal);

}  // namespace frobcat

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frobcat/exactla/matrix.hpp"
#include "frobcat/report.hpp"
#include "frobcat/repcat/hopf.hpp"

namespace frobcat {

/// A finite-dimensional left H-module: an object of Rep(H).
class Obj {
 public:
  Obj() = default;
  /// `action[h]` is the matrix of basis element e_h of H.
  Obj(HopfPtr hopf, std::vector<Matrix> action);
  /// From the packed dim × (dim H · dim) form: block h is the action of e_h.
  static Obj from_action_matrix(HopfPtr hopf, const Matrix& packed);

  /// The monoidal unit: k with H acting through the counit.
  static Obj unit(HopfPtr hopf);
  /// k^dim with H acting through the counit.
  static Obj trivial(HopfPtr hopf, std::size_t dim);
  static Obj regular(HopfPtr hopf);

  const HopfPtr& hopf() const { return hopf_; }
  std::size_t dim() const { return dim_; }
  const Matrix& act(std::size_t basis_index) const { return action_[basis_index]; }
  const std::vector<Matrix>& actions() const { return action_; }
  /// Action of an arbitrary element of H given as a column.
  Matrix act_element(const Matrix& h) const;
  Matrix action_matrix() const;

 private:
  HopfPtr hopf_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
};

/// Associativity and unitality of the action.
ValidationReport check_module(const Obj& x);

void require_same_category(const Obj& a, const Obj& b);

struct Mor {
  Obj domain;
  Obj codomain;
  Matrix matrix;
};

/// f·ρ_X(h) = ρ_Y(h)·f for every basis element h.
bool is_equivariant(const Obj& domain, const Obj& codomain, const Matrix& f);
bool is_morphism(const Mor& f);

Mor identity_mor(const Obj& x);
Mor compose(const Mor& g, const Mor& f);  // g ∘ f
Mor tensor_mor(const Mor& f, const Mor& g);

Obj tensor_obj(const Obj& x, const Obj& y);
/// Tensor power with the empty power equal to the unit.
Obj tensor_power(const Obj& x, std::size_t k);

/// c_{X,Y} = flip ∘ (R acting on X⊗Y).
Mor braiding(const Obj& x, const Obj& y);

struct DualData {
  Obj left;        // X*, action ρ(S h)ᵀ
  Obj right;       // *X, action ρ(S⁻¹ h)ᵀ
  Mor ev;          // X*⊗X → 1
  Mor coev;        // 1 → X⊗X*
  Mor ev_right;    // X⊗*X → 1
  Mor coev_right;  // 1 → *X⊗X
};
DualData dual_obj(const Obj& x);

/// Rows form a basis of Hom_C(X, 1).
Matrix hom_invariants(const Obj& x);
/// Basis of Hom_C(X, Y).
std::vector<Matrix> hom_space(const Obj& x, const Obj& y);

Obj direct_sum_obj(std::span<const Obj> parts);
/// Restriction of the action to the H-stable subspace spanned by the columns
/// of `basis` (which must be independent). Throws PreconditionViolation if the
/// span is not stable.
Obj sub_obj(const Obj& x, const Matrix& basis);
/// Induced action on a quotient with projection π (onto) and section σ
/// (π·σ = id); the kernel of π must be stable.
Obj quotient_obj(const Obj& x, const Matrix& projection, const Matrix& section);

}  // namespace frobcat

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "frobcat/exactla/matrix.hpp"
#include "frobcat/report.hpp"
#include "frobcat/repcat/group.hpp"

namespace frobcat {

/// How a Hopf algebra of the form Λ(W)#kG was built. Basis element w_S·g has
/// index S·|G| + g, S a bitmask over a basis of W; with W = 0 this is the
/// plain group algebra.
struct SmashLayout {
  Group group;
  std::optional<std::size_t> u;  // central involution defining R_u, if any
  std::size_t odd_dim = 0;
  std::vector<Matrix> odd_action;  // ρ_W(g) for every g, odd_dim × odd_dim

  std::size_t index(unsigned subset, std::size_t g) const { return subset * group.order() + g; }
};

/// Finite-dimensional Hopf algebra with R-matrix, by structure constants.
struct HopfData {
  std::size_t dim = 0;
  Matrix mult;      // dim × dim²; column i·dim+j is e_i·e_j
  Matrix unit;      // dim × 1
  Matrix comult;    // dim² × dim; column j is Δ(e_j)
  Matrix counit;    // 1 × dim
  Matrix antipode;  // dim × dim; column j is S(e_j)
  Matrix rmatrix;   // dim² × 1
  std::optional<SmashLayout> layout;
};

using HopfPtr = std::shared_ptr<const HopfData>;

/// Shape-checks and wraps. Axioms are not checked here; see validate_hopf.
HopfPtr make_hopf(HopfData data);

/// Pointer identity or identical structure constants.
bool same_category(const HopfData& a, const HopfData& b);

/// Checks every Hopf, quasitriangular and triangular axiom by exact identity.
/// Throws MalformedInput on shape mismatch.
ValidationReport validate_hopf(const HopfData& h);

/// kG with Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹. R = 1⊗1, or R_u when `u` is
/// given.
HopfPtr group_algebra(const Group& group, std::optional<std::size_t> u = std::nullopt);

/// Rep of the trivial group: plain vector spaces.
HopfPtr vec_hopf();

/// kZ/2 with R_u = ½(1⊗1 + 1⊗u + u⊗1 − u⊗u); Rep is super vector spaces.
HopfPtr super_hopf();

/// Λ(W)#kG with W odd primitive (Δ(w) = w⊗1 + u⊗w, S(w) = −u·w) and R_u.
/// `w_action[g]` is the matrix of g on W. Throws MalformedInput unless u is a
/// central involution acting by −1 and w_action is a representation.
HopfPtr lambda_smash(const Group& group, std::size_t u, std::vector<Matrix> w_action);

/// Product of two elements of H^{⊗k}, given as columns of length dim^k.
Matrix tensor_power_multiply(const HopfData& h, std::size_t k, const Matrix& x, const Matrix& y);

/// Δ^{(k-1)}(e_index) as a column in H^{⊗k}; k = 1 gives e_index itself.
Matrix iterated_comult(const HopfData& h, std::size_t k, std::size_t index);

/// Matrix of S⁻¹.
Matrix inverse_antipode(const HopfData& h);

}  // namespace frobcat

#pragma once

#include <cstddef>
#include <vector>

#include "frobcat/algebra/algebra.hpp"
#include "frobcat/exactla/linalg.hpp"

namespace frobcat {

/// Finite monic filtration S_0 ⊆ S_1 ⊆ … ⊆ S_n of an object by column bases.
/// Degrees above n clamp to S_n.
struct FilteredObj {
  Obj ambient;
  std::vector<Matrix> steps;  // each in reduced column form

  std::size_t top() const { return steps.size() - 1; }
  const Matrix& step(std::size_t i) const { return steps[i < steps.size() ? i : steps.size() - 1]; }
};

/// Normalizes every step to its reduced column basis. Throws MalformedInput
/// on shape errors, an empty step list, or steps that are not nested.
FilteredObj make_filtered(Obj ambient, std::vector<Matrix> steps);

/// The one-step filtration S_0 = X.
FilteredObj single_step(const Obj& x);

/// Nesting, H-stability of every step and S_n = X.
ValidationReport check_filtered_obj(const FilteredObj& f);

/// Prepends `shift` zero steps, so S'_i = S_{i−shift}.
FilteredObj shift_filtration(const FilteredObj& f, std::size_t shift);

/// Preimage filtration F_I(i) = f⁻¹(S_i) for f: I → A.
FilteredObj induced_filtration(const Obj& source, const Matrix& f, const FilteredObj& target);

/// Step k is Σ_{i+j=k} S_i^X ⊗ S_j^Y.
FilteredObj tensor_filtered(const FilteredObj& x, const FilteredObj& y);

/// Image filtration π(S_i) on a quotient.
FilteredObj image_filtration(const Obj& quotient, const Matrix& projection, const FilteredObj& f);

/// f(S_i^X) ⊆ S_i^Y for every i.
bool is_filtered_map(const FilteredObj& x, const FilteredObj& y, const Matrix& f);

/// Complement coordinates for F(i)/F(i−1); empty pieces above the top.
ComplementMaps graded_piece(const FilteredObj& f, std::size_t i);

/// A graded object stored as its total object with components in consecutive
/// coordinate blocks.
struct GradedObj {
  Obj total;
  std::vector<std::size_t> dims;

  std::size_t top() const { return dims.size() - 1; }
  std::size_t offset(std::size_t i) const;
};

/// Degreewise quotients with block-diagonal action.
GradedObj gr_obj(const FilteredObj& f);

/// The degreewise induced maps gr(f)_i = π_i^Y f σ_i^X for degrees
/// 0..max(n_X, n_Y). Throws PreconditionViolation if f is not filtered.
std::vector<Matrix> gr_mor(const FilteredObj& x, const FilteredObj& y, const Matrix& f);

/// gr₂: gr(X)⊗gr(Y) → gr(X⊗Y), the sum over i+j=k of π_k^{X⊗Y}(σ_i⊗σ_j),
/// on total coordinates.
Matrix gr2(const FilteredObj& x, const FilteredObj& y);

struct FilteredAlg {
  AlgObj algebra;
  FilteredObj filtration;
};

/// Filtered-object checks plus u ∈ S_0 and m(S_i⊗S_j) ⊆ S_{i+j}.
ValidationReport check_filtered_algebra(const FilteredAlg& a);

/// S_0 is one-dimensional, spanned by u, with H acting through the counit.
/// Check names: "step-0-one-dimensional", "step-0-spanned-by-unit",
/// "step-0-trivial-action".
ValidationReport check_connected(const FilteredAlg& a);
bool is_connected(const FilteredAlg& a);

FilteredAlg tensor_filtered_alg(const FilteredAlg& a, const FilteredAlg& b);

/// A graded algebra stored as its total algebra with components in
/// consecutive coordinate blocks.
struct GradedAlg {
  AlgObj total;
  std::vector<std::size_t> dims;

  std::size_t top() const { return dims.size() - 1; }
  std::size_t offset(std::size_t i) const;
  /// Multiplication B_i⊗B_j → B_{i+j}; zero-row block if i+j > top.
  Matrix mult_block(std::size_t i, std::size_t j) const;
  GradedObj graded_obj() const { return {total.carrier, dims}; }
};

/// Algebra checks plus homogeneity of m, u in degree 0 and block-diagonal
/// action.
ValidationReport check_graded_algebra(const GradedAlg& b);

/// The largest degree with a nonzero component.
std::size_t top_degree(const GradedAlg& b);

struct GrResult {
  GradedAlg graded;
  std::vector<Matrix> projections;  // π_i: dims[i] × dim A, killing S_{i−1}
  std::vector<Matrix> sections;     // σ_i: dim A × dims[i], columns in S_i
};

/// Associated graded algebra with Θ_{i,j} = π_{i+j} m (σ_i⊗σ_j). Throws
/// PreconditionViolation if the filtered algebra is invalid.
GrResult gr(const FilteredAlg& a);

/// The filtration ⊕_{i≤j} B_i of a graded algebra.
FilteredAlg trivial_filtration(const GradedAlg& b);

/// Degree preservation, invertibility, multiplicativity, unitality and
/// equivariance of a total-coordinate map between graded algebras.
ValidationReport verify_graded_isomorphism(const GradedAlg& a, const GradedAlg& b, const Matrix& iso);

struct FilteredIdeal {
  WeakIdeal ideal;
  FilteredObj filtration;  // on the ideal's carrier
};

/// Ideal carrying the preimage filtration of A's filtration along φ.
FilteredIdeal filtered_ideal(const FilteredAlg& a, const WeakIdeal& ideal);

/// φ filtered and the actions filtered: S_i^A · F_I(j) ⊆ F_I(i+j) and
/// likewise on the right.
ValidationReport check_filtered_ideal(const FilteredAlg& a, const FilteredIdeal& ideal);

struct QuotientCommutation {
  GradedAlg quotient_of_gr;  // gr(A)/gr(I)
  GradedAlg gr_of_quotient;  // gr(A/I)
  Matrix iso;                // gr(A)/gr(I) → gr(A/I)
  ValidationReport report;
};

/// Builds both graded algebras and the map induced by A → A/I on
/// representatives, then verifies it is a graded algebra isomorphism.
QuotientCommutation graded_quotient_commutes(const FilteredAlg& a, const FilteredIdeal& ideal);

}  // namespace frobcat

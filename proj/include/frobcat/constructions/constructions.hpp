#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frobcat/algebra/algebra.hpp"
#include "frobcat/algebra/functors.hpp"
#include "frobcat/filtration/filtration.hpp"

namespace frobcat {

/// Monomials w_S of an exterior or Clifford algebra on m generators, as
/// bitmasks sorted by word length and then by value. Position in this list is
/// the basis index.
std::vector<unsigned> monomial_order(std::size_t generators);

/// A symmetric form B: W⊗W → 1.
struct BilinearFormData {
  Obj space;
  Matrix matrix;
};

/// Throws MalformedInput on a shape mismatch or a non-symmetric matrix, and
/// PreconditionViolation if the form is not a morphism in C.
BilinearFormData make_bilinear_form(Obj space, Matrix matrix);

/// Λ(W) on a basis of W, graded by word length, with H acting through the
/// iterated coproduct. Carries the coalgebra of the top-coefficient form when
/// that form is a morphism. Throws PreconditionViolation if the action does
/// not descend to Λ(W).
GradedAlg exterior_algebra(const Obj& w);

/// Cl(W, B) with w_i w_j + w_j w_i = 2B(w_i, w_j), in the monomial basis
/// reached by sorting words, filtered by word length.
FilteredAlg clifford_algebra(const Obj& w, const BilinearFormData& b);

struct CliffordGraded {
  GrResult graded;   // gr of the Clifford algebra
  GradedAlg exterior;
  Matrix iso;        // gr(Cl) → Λ(W) on total coordinates
  ValidationReport report;
};

/// The identification gr(Cl(W, B)) ≅ Λ(W) read off the top-degree
/// coordinates of the sections, checked with verify_graded_isomorphism.
CliffordGraded clifford_gr_isomorphism(const Obj& w, const FilteredAlg& clifford);

/// k[x]/(xⁿ) graded by degree, with the coalgebra of the x^{n−1} coefficient.
GradedAlg truncated_poly(std::size_t n, const HopfPtr& hopf = vec_hopf());

/// k[x]/(xⁿ − c) with the monomial filtration.
FilteredAlg deformed_truncated_poly(std::size_t n, const Rational& c = 1, const HopfPtr& hopf = vec_hopf());

/// End(V) with Δ(E_ij) = Σ_k E_ik⊗E_kj, ε(E_ij) = δ_ij. Throws
/// MalformedInput unless dim V = n.
AlgObj matrix_frobenius(std::size_t n, const Obj& v);

/// Upper-triangular 2×2 matrices on the basis E11, E12, E22.
AlgObj upper_triangular_2(const HopfPtr& hopf = vec_hopf());

/// k[x]/(x²).
AlgObj dual_numbers(const HopfPtr& hopf = vec_hopf());

struct RepresentingData {
  Group group;
  std::vector<std::size_t> subgroup;  // elements of H in G, identity included
  std::optional<CocycleTable> psi;    // on H, local indices
  std::size_t u = 0;
  std::vector<Matrix> w_action;       // one per element of G
  Matrix form;                        // B on W
  std::vector<Matrix> v_action;       // σ(h) for h in H, local indices
};

struct RepresentingAlgebra {
  AlgObj end_v;       // End(V) in Rep(H)
  AlgObj induced;     // Ind_H^Ĥ End(V), then given the zero odd action
  AlgObj clifford;    // Cl_W in Rep(Ĥ⋉W, u)
  AlgObj product;     // induced ⊗ clifford
  AlgObj algebra;     // induced up to Rep(G⋉W, u)
};

/// Composes End(V), induction to Ĥ = ⟨H, u⟩, the zero odd action, the
/// Clifford algebra of (W, B), their tensor product and induction to G.
/// Throws PreconditionViolation naming the violated hypothesis.
RepresentingAlgebra representing_algebra(const RepresentingData& data);

/// The smallest instance: G = Z/2 = ⟨u⟩, H trivial, W the sign line, B = [1],
/// V = k.
RepresentingData etingof_ostrik_min();

/// Named built-ins: "exterior:n", "clifford:n:identity", "clifford:n:zero",
/// "truncpoly:n", "matn:n", "dual-numbers", "upper-triangular-2",
/// "etingof-ostrik-min". Algebras without a natural filtration get S_0 = A.
/// Throws MalformedInput on an unknown name.
FilteredAlg builtin(const std::string& name);

/// A representative list of built-in names.
std::vector<std::string> builtin_examples();

}  // namespace frobcat

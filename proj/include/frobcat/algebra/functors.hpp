#pragma once

#include <cstddef>
#include <vector>

#include "frobcat/algebra/algebra.hpp"

namespace frobcat {

/// End(V) on the elementary-matrix basis (E_ij has index i·n + j) with
/// h·f = h₁ f S(h₂), Δ(E_ij) = Σ_k E_ik⊗E_kj and ε(E_ij) = δ_ij. Throws
/// PreconditionViolation unless S² = id on H.
AlgObj end_algebra(const Obj& v);

/// ψ[g][h] for group elements g, h.
using CocycleTable = std::vector<std::vector<Rational>>;

/// End(V) for a projective representation σ(g)σ(h) = ψ(g,h)σ(gh) of the
/// group of `hopf` (which must be a group algebra), acting by conjugation.
/// Throws MalformedInput if ψ is not a nonvanishing 2-cocycle or σ does not
/// satisfy the relation.
AlgObj end_algebra_twisted(const HopfPtr& hopf, const std::vector<Matrix>& sigma, const CocycleTable& psi);

/// Restriction along an embedding of groups, `embedding[h]` being the image
/// of element h of the target's group in the source's group. The odd parts
/// must agree.
Obj restrict_obj(const Obj& x, const HopfPtr& target, const std::vector<std::size_t>& embedding);
AlgObj restrict_algebra(const AlgObj& a, const HopfPtr& target, const std::vector<std::size_t>& embedding);

/// Induction of an algebra to a bigger category; `embedding[h]` is the image
/// of element h of the source's group in the target's group. Three shapes are
/// supported:
///   - group algebras both sides: kG⊗_{kH}A on coset representatives, with
///     (r_c⊗x)(r_d⊗y) = δ_cd r_c⊗xy;
///   - plain source, target Λ(W)#kG over the same group: the odd generators
///     act by zero and Δ, ε carry over;
///   - matching odd parts: as the first, with w·(r_c⊗x) = r_c⊗((r_c⁻¹·w)·x).
/// Coalgebra data is dropped in the coset cases. Throws MalformedInput on a
/// bad embedding and PreconditionViolation on unsupported shapes.
AlgObj induce(const AlgObj& a, const HopfPtr& target, const std::vector<std::size_t>& embedding);

}  // namespace frobcat

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobcat/algebra/algebra.hpp"
#include "frobcat/exactla/multipoly.hpp"
#include "frobcat/filtration/filtration.hpp"

namespace frobcat {

enum class DetectMode { exact, randomized, automatic };

struct DetectOptions {
  DetectMode mode = DetectMode::automatic;
  std::uint64_t seed = 0;
  /// Largest number of invariant functionals handled symbolically.
  std::size_t symbolic_capacity = 4;
  /// Largest algebra dimension handled symbolically.
  std::size_t symbolic_max_dim = kDefaultSymbolicDetMaxSize;
  /// Sample heights double from 1 up to this bound.
  unsigned max_height = 64;
  std::size_t samples_per_round = 8;
};

struct Refutation {
  std::optional<MultiPoly> determinant;  // exact mode: the zero polynomial
  std::size_t samples = 0;               // randomized mode
  Rational failure_bound = 0;            // bound on P(all samples vanish | Frobenius)
  std::string note;
};

struct FrobeniusCertificate {
  bool frobenius = false;
  std::string mode;  // "exact-symbolic" or "randomized"
  Matrix invariants;  // rows: basis of Hom_C(A, 1)
  // Witness, when frobenius.
  Matrix nu;      // 1 × dim
  Matrix gram;    // dim × dim, gram(a, b) = ν(e_a·e_b)
  Matrix q;       // dim² × 1
  Matrix comult;  // dim² × dim
  Matrix counit;  // 1 × dim
  Refutation refutation;
};

/// gram(a, b) = ν(e_a·e_b).
Matrix gram_matrix(const AlgObj& a, const Matrix& nu);

struct Copairing {
  Matrix gram;
  Matrix q;  // q = Σ Q[b][c] e_b⊗e_c with Q = gram⁻¹
  bool left_snake = false;   // (p⊗id)(id⊗q) = id
  bool right_snake = false;  // (id⊗p)(q⊗id) = id
};

/// The copairing of p = ν∘m, or nullopt if the Gram matrix is singular.
/// Throws PreconditionViolation if ν is not a morphism A → 1.
std::optional<Copairing> copairing_check(const AlgObj& a, const Matrix& nu);

/// Certificate with witness ν: q, Δ = (m⊗id)(id⊗q), ε = ν, all verified.
/// Throws PreconditionViolation if ν is degenerate or not equivariant, and
/// InternalFault if the extracted coalgebra fails a check.
FrobeniusCertificate certificate_from_form(const AlgObj& a, const Matrix& nu, std::string mode);

/// Decides whether A is Frobenius through the Gram pencil over Hom_C(A, 1).
/// Throws PreconditionViolation on an invalid algebra and CapacityExceeded in
/// exact mode when the pencil is too large.
FrobeniusCertificate frobenius_detect(const AlgObj& a, const DetectOptions& options = {});

struct ModuleIsoCheck {
  Matrix phi;  // Φ_l: A → *A
  bool morphism = false;
  bool intertwines = false;
  bool invertible = false;
  bool ok() const { return morphism && intertwines && invertible; }
};

/// Φ_l = (id_{*A}⊗ν m)(coev'_A⊗id_A) and the left-module intertwining with
/// λ_{*A}(b⊗f) = f(−·b), built from ev' and coev'.
ModuleIsoCheck module_iso_check(const AlgObj& a, const Matrix& nu);

struct IdealsInKernel {
  Matrix left;   // largest H-stable left ideal inside ker ν
  Matrix right;  // largest H-stable right ideal inside ker ν
  bool trivial() const { return left.cols() == 0 && right.cols() == 0; }
};

IdealsInKernel largest_ideal_in_kernel(const AlgObj& a, const Matrix& nu);

struct GradedFrobeniusReport {
  std::size_t top = 0;
  std::size_t top_dim = 0;
  std::vector<std::size_t> block_ranks;  // rank of the pairing B_{n−i}×B_i
  Matrix epsilon;                        // projection onto B_n
  ValidationReport checks;  // "top-is-unit", "top-projection-nondegenerate", "duality-blocks"
};

/// For a connected Frobenius graded algebra: B_n is the unit, the projection
/// onto B_n is a Frobenius form, and B_{n−i} pairs perfectly with B_i.
/// Throws PreconditionViolation when B is not connected or `cert` is negative.
GradedFrobeniusReport graded_frobenius_structure_check(const GradedAlg& b, const FrobeniusCertificate& cert);

enum class LiftOutcome { lifted, lift_failed, no_conclusion };

struct LiftResult {
  GrResult graded;
  FrobeniusCertificate graded_certificate;
  std::optional<GradedFrobeniusReport> graded_report;
  std::optional<Matrix> eta;  // projection A → F̄(n)
  std::optional<FrobeniusCertificate> certificate;
  LiftOutcome outcome = LiftOutcome::no_conclusion;
};

/// If gr(A) is Frobenius, certifies A with the top projection η. Throws
/// NotConnected naming the failed clause, and InternalFault if the top
/// component of a Frobenius gr(A) is not one-dimensional.
LiftResult lift_frobenius(const FilteredAlg& a, const DetectOptions& options = {});

}  // namespace frobcat

#include "frobcat/frobenius/frobenius.hpp"

#include <numeric>
#include <random>
#include <utility>

#include "frobcat/error.hpp"
#include "frobcat/exactla/linalg.hpp"

namespace frobcat {

namespace {

constexpr const char* kExact = "exact-symbolic";
constexpr const char* kRandomized = "randomized";

std::string failure_list(const ValidationReport& r) {
  std::string s;
  for (const auto& f : r.failures()) s += " " + f;
  return s;
}

Matrix combine(const Matrix& rows, std::span<const Rational> t) {
  Matrix out(1, rows.cols());
  for (std::size_t k = 0; k < rows.rows(); ++k) {
    if (sgn(t[k]) == 0) continue;
    for (std::size_t c = 0; c < rows.cols(); ++c) out(0, c) += t[k] * rows(k, c);
  }
  return out;
}

// Number of distinct fractions p/q with |p| ≤ h and 1 ≤ q ≤ h.
std::size_t sample_set_size(unsigned h) {
  std::size_t coprime = 0;
  for (unsigned p = 1; p <= h; ++p)
    for (unsigned q = 1; q <= h; ++q)
      if (std::gcd(p, q) == 1) ++coprime;
  return 1 + 2 * coprime;
}

// Largest subspace of span(start) stable under every operator in `ops`.
Matrix largest_stable(Matrix basis, const std::vector<Matrix>& ops) {
  for (;;) {
    if (basis.cols() == 0) return basis;
    const Matrix ann = annihilator(basis);
    Matrix constraints(0, basis.cols());
    for (const auto& op : ops) constraints = vstack(constraints, ann * op * basis);
    const Matrix kernel = kernel_basis(constraints);
    if (kernel.cols() == basis.cols()) return basis;
    basis = kernel.cols() == 0 ? Matrix(basis.rows(), 0) : column_space(basis * kernel);
  }
}

bool trivial_on_block(const GradedAlg& b, std::size_t i) {
  const auto& h = *b.total.hopf();
  const std::size_t o = b.offset(i), d = b.dims[i];
  for (std::size_t e = 0; e < h.dim; ++e) {
    if (b.total.carrier.act(e).block(o, o, d, d) != h.counit(0, e) * Matrix::identity(d)) return false;
  }
  return true;
}

}  // namespace

Matrix gram_matrix(const AlgObj& a, const Matrix& nu) {
  const std::size_t d = a.dim();
  if (nu.rows() != 1 || nu.cols() != d) throw MalformedInput("functional has the wrong shape");
  const Matrix p = nu * a.m;
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = p(0, i * d + j);
  return g;
}

std::optional<Copairing> copairing_check(const AlgObj& a, const Matrix& nu) {
  const std::size_t d = a.dim();
  Copairing c;
  c.gram = gram_matrix(a, nu);
  if (!is_equivariant(a.carrier, Obj::unit(a.hopf()), nu)) {
    throw PreconditionViolation("functional is not a morphism A -> 1");
  }
  const auto inv = inverse(c.gram);
  if (!inv) return std::nullopt;
  c.q = Matrix(d * d, 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c.q(i * d + j, 0) = (*inv)(i, j);
  const Matrix p = nu * a.m, id = Matrix::identity(d);
  c.left_snake = kron(p, id) * kron(id, c.q) == id;
  c.right_snake = kron(id, p) * kron(c.q, id) == id;
  return c;
}

FrobeniusCertificate certificate_from_form(const AlgObj& a, const Matrix& nu, std::string mode) {
  const auto cp = copairing_check(a, nu);
  if (!cp) throw PreconditionViolation("functional is degenerate");
  if (!cp->left_snake || !cp->right_snake) throw InternalFault("copairing fails a snake identity");
  const std::size_t d = a.dim();
  const Matrix id = Matrix::identity(d);
  FrobeniusCertificate cert;
  cert.frobenius = true;
  cert.mode = std::move(mode);
  cert.nu = nu;
  cert.gram = cp->gram;
  cert.q = cp->q;
  cert.comult = kron(a.m, id) * kron(id, cp->q);
  cert.counit = nu;
  const AlgObj full{a.carrier, a.m, a.u, cert.comult, cert.counit};
  const auto report = check_algebra(full);
  if (!report.ok()) throw InternalFault("extracted coalgebra fails:" + failure_list(report));
  return cert;
}

FrobeniusCertificate frobenius_detect(const AlgObj& a, const DetectOptions& options) {
  const AlgObj plain{a.carrier, a.m, a.u, std::nullopt, std::nullopt};
  const auto valid = check_algebra(plain);
  if (!valid.ok()) throw PreconditionViolation("not a valid algebra:" + failure_list(valid));
  const std::size_t dim = a.dim();
  const Matrix invariants = hom_invariants(a.carrier);
  const std::size_t nvars = invariants.rows();

  if (dim == 0) {
    FrobeniusCertificate cert;
    cert.frobenius = true;
    cert.mode = kExact;
    cert.invariants = invariants;
    cert.nu = cert.counit = Matrix(1, 0);
    cert.q = Matrix(0, 1);
    return cert;
  }

  bool exact = false;
  const bool fits = nvars <= options.symbolic_capacity && dim <= options.symbolic_max_dim;
  switch (options.mode) {
    case DetectMode::exact:
      if (!fits) {
        throw CapacityExceeded("exact mode: " + std::to_string(nvars) + " invariant functionals on a " +
                               std::to_string(dim) + "-dimensional algebra exceed the symbolic capacity");
      }
      exact = true;
      break;
    case DetectMode::randomized:
      exact = false;
      break;
    case DetectMode::automatic:
      exact = fits;
      break;
  }

  if (nvars == 0) {
    FrobeniusCertificate cert;
    cert.mode = kExact;
    cert.invariants = invariants;
    cert.refutation.determinant = MultiPoly(0);
    cert.refutation.note = "no nonzero morphisms A -> 1";
    return cert;
  }

  std::vector<Matrix> pencil;
  for (std::size_t k = 0; k < nvars; ++k) pencil.push_back(gram_matrix(a, invariants.block(k, 0, 1, dim)));

  auto finish = [&](const std::vector<Rational>& t, const char* mode) {
    auto cert = certificate_from_form(a, combine(invariants, t), mode);
    cert.invariants = invariants;
    return cert;
  };
  auto unit_point = [&](std::size_t k) {
    std::vector<Rational> t(nvars);
    t[k] = 1;
    return t;
  };

  if (exact) {
    const MultiPoly det = symbolic_det(pencil, options.symbolic_max_dim);
    if (det.is_zero()) {
      FrobeniusCertificate cert;
      cert.mode = kExact;
      cert.invariants = invariants;
      cert.refutation.determinant = det;
      cert.refutation.note = "the Gram pencil determinant is identically zero";
      return cert;
    }
    for (std::size_t k = 0; k < nvars; ++k) {
      const auto t = unit_point(k);
      if (sgn(det.evaluate(t)) != 0) return finish(t, kExact);
    }
    // A nonzero polynomial of degree ≤ dim in each variable does not vanish on
    // all of {0..dim}^nvars.
    std::vector<unsigned> digits(nvars, 0);
    for (;;) {
      std::vector<Rational> t(digits.begin(), digits.end());
      if (sgn(det.evaluate(t)) != 0) return finish(t, kExact);
      std::size_t i = 0;
      while (i < nvars && ++digits[i] > dim) digits[i++] = 0;
      if (i == nvars) break;
    }
    throw InternalFault("nonzero determinant polynomial vanishes on the whole grid");
  }

  auto gram_at = [&](const std::vector<Rational>& t) {
    Matrix g(dim, dim);
    for (std::size_t k = 0; k < nvars; ++k)
      if (sgn(t[k]) != 0) g += t[k] * pencil[k];
    return g;
  };
  std::size_t samples = 0;
  for (std::size_t k = 0; k < nvars; ++k) {
    const auto t = unit_point(k);
    ++samples;
    if (sgn(determinant(gram_at(t))) != 0) return finish(t, kRandomized);
  }
  std::mt19937_64 rng(options.seed);
  Rational bound = 1;
  for (unsigned h = 1; h <= options.max_height; h *= 2) {
    const Rational per_sample = std::min<Rational>(Rational(1), Rational(dim) / Rational(sample_set_size(h)));
    for (std::size_t s = 0; s < options.samples_per_round; ++s) {
      std::vector<Rational> t(nvars);
      for (auto& x : t) {
        const long p = static_cast<long>(rng() % (2 * h + 1)) - static_cast<long>(h);
        const long q = static_cast<long>(rng() % h) + 1;
        x = Rational(p, q);
        x.canonicalize();
      }
      ++samples;
      if (sgn(determinant(gram_at(t))) != 0) return finish(t, kRandomized);
      bound *= per_sample;
    }
  }
  FrobeniusCertificate cert;
  cert.mode = kRandomized;
  cert.invariants = invariants;
  cert.refutation.samples = samples;
  cert.refutation.failure_bound = bound;
  cert.refutation.note = "no nondegenerate Gram matrix found among the samples";
  return cert;
}

ModuleIsoCheck module_iso_check(const AlgObj& a, const Matrix& nu) {
  const std::size_t d = a.dim();
  const Matrix id = Matrix::identity(d);
  const DualData dual = dual_obj(a.carrier);
  const Matrix p = nu * a.m;
  ModuleIsoCheck out;
  out.phi = kron(id, p) * kron(dual.coev_right.matrix, id);
  out.morphism = is_equivariant(a.carrier, dual.right, out.phi);
  // λ(e_b⊗f_j) = Σ_i f_j(e_i·e_b) f_i; this is (id⊗ev')(id⊗m⊗id)(coev'⊗id⊗id)
  // written out for the δ-diagonal ev', coev'.
  Matrix lambda(d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t j = 0; j < d; ++j) lambda(i, b * d + j) = a.m(j, i * d + b);
  out.intertwines = lambda * kron(id, out.phi) == out.phi * a.m;
  out.invertible = rank(out.phi) == d;
  return out;
}

IdealsInKernel largest_ideal_in_kernel(const AlgObj& a, const Matrix& nu) {
  if (!is_equivariant(a.carrier, Obj::unit(a.hopf()), nu)) {
    throw PreconditionViolation("functional is not a morphism A -> 1");
  }
  const std::size_t d = a.dim();
  const Matrix kernel = kernel_basis(nu);
  std::vector<Matrix> left_ops(a.carrier.actions()), right_ops(a.carrier.actions());
  for (std::size_t i = 0; i < d; ++i) {
    left_ops.push_back(left_mult(a, Matrix::unit_column(d, i)));
    right_ops.push_back(right_mult(a, Matrix::unit_column(d, i)));
  }
  return {largest_stable(kernel, left_ops), largest_stable(kernel, right_ops)};
}

GradedFrobeniusReport graded_frobenius_structure_check(const GradedAlg& b, const FrobeniusCertificate& cert) {
  if (!cert.frobenius) throw PreconditionViolation("graded algebra is not certified Frobenius");
  if (b.dims.empty() || b.dims[0] != 1 || b.total.u.is_zero() || !trivial_on_block(b, 0)) {
    throw PreconditionViolation("graded algebra is not connected");
  }
  GradedFrobeniusReport report;
  const std::size_t n = top_degree(b), d = b.total.dim();
  report.top = n;
  report.top_dim = b.dims[n];
  report.checks.add("top-is-unit", b.dims[n] == 1 && trivial_on_block(b, n));
  report.epsilon = Matrix(1, d);
  report.epsilon(0, b.offset(n)) = 1;
  const Matrix g = gram_matrix(b.total, report.epsilon);
  report.checks.add("top-projection-nondegenerate", rank(g) == d);
  bool dual = true;
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t r = rank(g.block(b.offset(n - i), b.offset(i), b.dims[n - i], b.dims[i]));
    report.block_ranks.push_back(r);
    if (r != b.dims[i] || b.dims[n - i] != b.dims[i]) dual = false;
  }
  report.checks.add("duality-blocks", dual);
  return report;
}

LiftResult lift_frobenius(const FilteredAlg& a, const DetectOptions& options) {
  const auto connected = check_connected(a);
  if (!connected.ok()) throw NotConnected("filtered algebra is not connected:" + failure_list(connected));
  LiftResult out;
  out.graded = gr(a);
  out.graded_certificate = frobenius_detect(out.graded.graded.total, options);
  if (!out.graded_certificate.frobenius) {
    out.outcome = LiftOutcome::no_conclusion;
    return out;
  }
  out.graded_report = graded_frobenius_structure_check(out.graded.graded, out.graded_certificate);
  const std::size_t n = top_degree(out.graded.graded);
  if (out.graded.graded.dims[n] != 1) {
    throw InternalFault("top component of a Frobenius connected graded algebra has dimension " +
                        std::to_string(out.graded.graded.dims[n]));
  }
  out.eta = out.graded.projections[n];
  if (!is_equivariant(a.algebra.carrier, Obj::unit(a.algebra.hopf()), *out.eta)) {
    throw InternalFault("top projection is not a morphism A -> 1");
  }
  if (copairing_check(a.algebra, *out.eta)) {
    out.certificate = certificate_from_form(a.algebra, *out.eta, kExact);
    out.outcome = LiftOutcome::lifted;
  } else {
    out.outcome = LiftOutcome::lift_failed;
  }
  return out;
}

}  // namespace frobcat

#include "frobcat/repcat/object.hpp"

#include <string>
#include <utility>

#include "frobcat/error.hpp"
#include "frobcat/exactla/linalg.hpp"

namespace frobcat {

Obj::Obj(HopfPtr hopf, std::vector<Matrix> action)
    : hopf_(std::move(hopf)), action_(std::move(action)) {
  if (!hopf_) throw MalformedInput("object without Hopf algebra");
  if (action_.size() != hopf_->dim) {
    throw MalformedInput("object action needs " + std::to_string(hopf_->dim) + " matrices");
  }
  dim_ = action_[0].rows();
  for (const auto& a : action_) {
    if (a.rows() != dim_ || a.cols() != dim_) throw MalformedInput("object action shape");
  }
}

Obj Obj::from_action_matrix(HopfPtr hopf, const Matrix& packed) {
  if (!hopf) throw MalformedInput("object without Hopf algebra");
  const std::size_t d = packed.rows();
  if (packed.cols() != hopf->dim * d) {
    throw MalformedInput("action must be dim x (hopf dim * dim)");
  }
  std::vector<Matrix> action;
  for (std::size_t h = 0; h < hopf->dim; ++h) action.push_back(packed.block(0, h * d, d, d));
  return Obj(std::move(hopf), std::move(action));
}

Obj Obj::unit(HopfPtr hopf) { return trivial(std::move(hopf), 1); }

Obj Obj::trivial(HopfPtr hopf, std::size_t dim) {
  std::vector<Matrix> action;
  for (std::size_t h = 0; h < hopf->dim; ++h) action.push_back(hopf->counit(0, h) * Matrix::identity(dim));
  return Obj(std::move(hopf), std::move(action));
}

Obj Obj::regular(HopfPtr hopf) {
  const std::size_t n = hopf->dim;
  std::vector<Matrix> action;
  for (std::size_t h = 0; h < n; ++h) action.push_back(hopf->mult.block(0, h * n, n, n));
  return Obj(std::move(hopf), std::move(action));
}

Matrix Obj::act_element(const Matrix& h) const {
  Matrix out(dim_, dim_);
  for (std::size_t i = 0; i < hopf_->dim; ++i) {
    if (sgn(h(i, 0)) != 0) out += h(i, 0) * action_[i];
  }
  return out;
}

Matrix Obj::action_matrix() const {
  Matrix out(dim_, dim_ * hopf_->dim);
  for (std::size_t h = 0; h < hopf_->dim; ++h) out.set_block(0, h * dim_, action_[h]);
  return out;
}

ValidationReport check_module(const Obj& x) {
  const HopfData& h = *x.hopf();
  ValidationReport report;
  bool assoc = true;
  for (std::size_t i = 0; i < h.dim && assoc; ++i)
    for (std::size_t j = 0; j < h.dim && assoc; ++j)
      assoc = x.act(i) * x.act(j) == x.act_element(h.mult.col(i * h.dim + j));
  report.add("action-associativity", assoc);
  report.add("action-unitality", x.act_element(h.unit) == Matrix::identity(x.dim()));
  return report;
}

void require_same_category(const Obj& a, const Obj& b) {
  if (!same_category(*a.hopf(), *b.hopf())) {
    throw CategoryMismatch("objects live over different Hopf algebras");
  }
}

bool is_equivariant(const Obj& domain, const Obj& codomain, const Matrix& f) {
  if (f.rows() != codomain.dim() || f.cols() != domain.dim()) return false;
  if (!same_category(*domain.hopf(), *codomain.hopf())) return false;
  for (std::size_t h = 0; h < domain.hopf()->dim; ++h) {
    if (f * domain.act(h) != codomain.act(h) * f) return false;
  }
  return true;
}

bool is_morphism(const Mor& f) { return is_equivariant(f.domain, f.codomain, f.matrix); }

Mor identity_mor(const Obj& x) { return {x, x, Matrix::identity(x.dim())}; }

Mor compose(const Mor& g, const Mor& f) {
  require_same_category(f.codomain, g.domain);
  if (f.codomain.dim() != g.domain.dim()) throw MalformedInput("compose: dimension mismatch");
  return {f.domain, g.codomain, g.matrix * f.matrix};
}

Mor tensor_mor(const Mor& f, const Mor& g) {
  return {tensor_obj(f.domain, g.domain), tensor_obj(f.codomain, g.codomain),
          kron(f.matrix, g.matrix)};
}

Obj tensor_obj(const Obj& x, const Obj& y) {
  require_same_category(x, y);
  const HopfData& h = *x.hopf();
  const std::size_t n = h.dim;
  std::vector<Matrix> action;
  action.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    Matrix a(x.dim() * y.dim(), x.dim() * y.dim());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& c = h.comult(i * n + j, e);
        if (sgn(c) != 0) a += c * kron(x.act(i), y.act(j));
      }
    action.push_back(std::move(a));
  }
  return Obj(x.hopf(), std::move(action));
}

Obj tensor_power(const Obj& x, std::size_t k) {
  Obj out = Obj::unit(x.hopf());
  for (std::size_t i = 0; i < k; ++i) out = i == 0 ? x : tensor_obj(out, x);
  return out;
}

Mor braiding(const Obj& x, const Obj& y) {
  require_same_category(x, y);
  const HopfData& h = *x.hopf();
  const std::size_t n = h.dim;
  Matrix r_action(x.dim() * y.dim(), x.dim() * y.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& c = h.rmatrix(i * n + j, 0);
      if (sgn(c) != 0) r_action += c * kron(x.act(i), y.act(j));
    }
  return {tensor_obj(x, y), tensor_obj(y, x), flip_matrix(x.dim(), y.dim()) * r_action};
}

DualData dual_obj(const Obj& x) {
  const HopfData& h = *x.hopf();
  const Matrix s_inv = inverse_antipode(h);
  std::vector<Matrix> left, right;
  for (std::size_t e = 0; e < h.dim; ++e) {
    left.push_back(x.act_element(h.antipode.col(e)).transpose());
    right.push_back(x.act_element(s_inv.col(e)).transpose());
  }
  Obj xl(x.hopf(), std::move(left));
  Obj xr(x.hopf(), std::move(right));
  const std::size_t d = x.dim();
  Matrix pairing(1, d * d);  // Σ_i e^i⊗e_i or e_i⊗e^i, both δ on the diagonal
  for (std::size_t i = 0; i < d; ++i) pairing(0, i * d + i) = 1;
  const Obj one = Obj::unit(x.hopf());
  return DualData{xl,
                  xr,
                  {tensor_obj(xl, x), one, pairing},
                  {one, tensor_obj(x, xl), pairing.transpose()},
                  {tensor_obj(x, xr), one, pairing},
                  {one, tensor_obj(xr, x), pairing.transpose()}};
}

Matrix hom_invariants(const Obj& x) {
  const HopfData& h = *x.hopf();
  const std::size_t d = x.dim();
  Matrix system(h.dim * d, d);
  for (std::size_t e = 0; e < h.dim; ++e) {
    // ν·ρ(e) = ε(e)·ν, transposed.
    system.set_block(e * d, 0, x.act(e).transpose() - h.counit(0, e) * Matrix::identity(d));
  }
  return column_space(kernel_basis(system)).transpose();
}

std::vector<Matrix> hom_space(const Obj& x, const Obj& y) {
  require_same_category(x, y);
  const HopfData& h = *x.hopf();
  const std::size_t dx = x.dim(), dy = y.dim();
  // Row-major vec(f): vec(f·A) = (I ⊗ Aᵀ)·vec(f), vec(B·f) = (B ⊗ I)·vec(f).
  Matrix system(h.dim * dx * dy, dx * dy);
  for (std::size_t e = 0; e < h.dim; ++e) {
    system.set_block(e * dx * dy, 0,
                     kron(Matrix::identity(dy), x.act(e).transpose()) -
                         kron(y.act(e), Matrix::identity(dx)));
  }
  const Matrix k = kernel_basis(system);
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    Matrix f(dy, dx);
    for (std::size_t i = 0; i < dy; ++i)
      for (std::size_t j = 0; j < dx; ++j) f(i, j) = k(i * dx + j, c);
    out.push_back(std::move(f));
  }
  return out;
}

Obj direct_sum_obj(std::span<const Obj> parts) {
  if (parts.empty()) throw MalformedInput("direct sum of nothing");
  const HopfData& h = *parts[0].hopf();
  std::vector<Matrix> action;
  for (std::size_t e = 0; e < h.dim; ++e) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) {
      require_same_category(parts[0], p);
      blocks.push_back(p.act(e));
    }
    action.push_back(direct_sum(blocks));
  }
  return Obj(parts[0].hopf(), std::move(action));
}

Obj sub_obj(const Obj& x, const Matrix& basis) {
  std::vector<Matrix> action;
  for (std::size_t e = 0; e < x.hopf()->dim; ++e) {
    if (basis.cols() == 0) {
      action.emplace_back(0, 0);
      continue;
    }
    auto coords = solve(basis, x.act(e) * basis);
    if (!coords) throw PreconditionViolation("subspace is not stable under the action");
    action.push_back(std::move(*coords));
  }
  return Obj(x.hopf(), std::move(action));
}

Obj quotient_obj(const Obj& x, const Matrix& projection, const Matrix& section) {
  std::vector<Matrix> action;
  for (std::size_t e = 0; e < x.hopf()->dim; ++e) action.push_back(projection * x.act(e) * section);
  return Obj(x.hopf(), std::move(action));
}

}  // namespace frobcat

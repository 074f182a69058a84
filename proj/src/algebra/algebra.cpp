#include "frobcat/algebra/algebra.hpp"

#include <string>
#include <utility>

#include "frobcat/error.hpp"
#include "frobcat/exactla/linalg.hpp"

namespace frobcat {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw MalformedInput(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

void check_shapes(const AlgObj& a) {
  const std::size_t d = a.dim();
  require_shape(a.m, d, d * d, "multiplication");
  require_shape(a.u, d, 1, "unit");
  if (a.comult.has_value() != a.counit.has_value()) {
    throw MalformedInput("comultiplication and counit must be given together");
  }
  if (a.comult) {
    require_shape(*a.comult, d * d, d, "comultiplication");
    require_shape(*a.counit, 1, d, "counit");
  }
}

std::vector<Matrix> left_mult_all(const AlgObj& a) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(left_mult(a, Matrix::unit_column(a.dim(), i)));
  return out;
}

// Coordinates of `vectors` in the independent columns of `basis`.
std::optional<Matrix> coordinates(const Matrix& basis, const Matrix& vectors) {
  if (basis.cols() == 0) {
    if (!vectors.is_zero()) return std::nullopt;
    return Matrix(0, vectors.cols());
  }
  return solve(basis, vectors);
}

}  // namespace

AlgObj make_algebra(Obj carrier, Matrix m, Matrix u, std::optional<Matrix> comult,
                    std::optional<Matrix> counit) {
  AlgObj a{std::move(carrier), std::move(m), std::move(u), std::move(comult), std::move(counit)};
  check_shapes(a);
  return a;
}

AlgObj unit_algebra(const HopfPtr& hopf) {
  return {Obj::unit(hopf), Matrix{{1}}, Matrix{{1}}, Matrix{{1}}, Matrix{{1}}};
}

Matrix multiply(const AlgObj& a, const Matrix& x, const Matrix& y) {
  const std::size_t d = a.dim();
  Matrix out(d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x(i, 0)) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y(j, 0)) == 0) continue;
      const Rational c = x(i, 0) * y(j, 0);
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& s = a.m(k, i * d + j);
        if (sgn(s) != 0) out(k, 0) += c * s;
      }
    }
  }
  return out;
}

Matrix left_mult(const AlgObj& a, const Matrix& x) {
  return a.m * kron(x, Matrix::identity(a.dim()));
}

Matrix right_mult(const AlgObj& a, const Matrix& x) {
  return a.m * kron(Matrix::identity(a.dim()), x);
}

ValidationReport check_algebra(const AlgObj& a) {
  check_shapes(a);
  const std::size_t d = a.dim();
  const Matrix id = Matrix::identity(d);
  ValidationReport report;

  // L_{e_i e_j} = L_{e_i} L_{e_j} for all i, j is associativity.
  const auto lm = left_mult_all(a);
  bool assoc = true;
  for (std::size_t i = 0; i < d && assoc; ++i) {
    for (std::size_t j = 0; j < d && assoc; ++j) {
      Matrix lhs(d, d);
      for (std::size_t k = 0; k < d; ++k) {
        if (sgn(a.m(k, i * d + j)) != 0) lhs += a.m(k, i * d + j) * lm[k];
      }
      assoc = lhs == lm[i] * lm[j];
    }
  }
  report.add("associativity", assoc);
  report.add("unitality", left_mult(a, a.u) == id && right_mult(a, a.u) == id);
  report.add("multiplication-equivariant", is_equivariant(tensor_obj(a.carrier, a.carrier), a.carrier, a.m));
  report.add("unit-equivariant", is_equivariant(Obj::unit(a.hopf()), a.carrier, a.u));

  if (a.comult) {
    const Matrix& delta = *a.comult;
    const Matrix& eps = *a.counit;
    report.add("coassociativity", kron(delta, id) * delta == kron(id, delta) * delta);
    report.add("counitality", kron(eps, id) * delta == id && kron(id, eps) * delta == id);
    report.add("comultiplication-equivariant",
               is_equivariant(a.carrier, tensor_obj(a.carrier, a.carrier), delta));
    report.add("counit-equivariant", is_equivariant(a.carrier, Obj::unit(a.hopf()), eps));
    const Matrix delta_m = delta * a.m;
    report.add("frobenius-left", kron(a.m, id) * kron(id, delta) == delta_m);
    report.add("frobenius-right", kron(id, a.m) * kron(delta, id) == delta_m);
  }
  return report;
}

bool is_commutative(const AlgObj& a) {
  return a.m * braiding(a.carrier, a.carrier).matrix == a.m;
}

AlgObj tensor_algebra_of(const AlgObj& a, const AlgObj& b) {
  require_same_category(a.carrier, b.carrier);
  const Matrix ia = Matrix::identity(a.dim()), ib = Matrix::identity(b.dim());
  AlgObj out;
  out.carrier = tensor_obj(a.carrier, b.carrier);
  out.m = kron(a.m, b.m) * kron(ia, kron(braiding(b.carrier, a.carrier).matrix, ib));
  out.u = kron(a.u, b.u);
  if (a.comult && b.comult) {
    out.comult = kron(ia, kron(braiding(a.carrier, b.carrier).matrix, ib)) * kron(*a.comult, *b.comult);
    out.counit = kron(*a.counit, *b.counit);
  }
  return out;
}

ValidationReport check_algebra_module(const ModuleObj& mod) {
  const AlgObj& a = mod.algebra;
  const Obj& x = mod.carrier;
  require_same_category(a.carrier, x);
  const std::size_t da = a.dim(), dx = x.dim();
  const Matrix ia = Matrix::identity(da), ix = Matrix::identity(dx);
  const bool wants_left = mod.side != Side::right;
  const bool wants_right = mod.side != Side::left;
  if (wants_left && !mod.left) throw MalformedInput("module: missing left action");
  if (wants_right && !mod.right) throw MalformedInput("module: missing right action");

  ValidationReport report;
  if (wants_left) {
    const Matrix& l = *mod.left;
    require_shape(l, dx, da * dx, "left action");
    report.add("left-associativity", l * kron(a.m, ix) == l * kron(ia, l));
    report.add("left-unitality", l * kron(a.u, ix) == ix);
    report.add("left-equivariant", is_equivariant(tensor_obj(a.carrier, x), x, l));
  }
  if (wants_right) {
    const Matrix& r = *mod.right;
    require_shape(r, dx, dx * da, "right action");
    report.add("right-associativity", r * kron(r, ia) == r * kron(ix, a.m));
    report.add("right-unitality", r * kron(ix, a.u) == ix);
    report.add("right-equivariant", is_equivariant(tensor_obj(x, a.carrier), x, r));
  }
  if (mod.side == Side::bi) {
    report.add("bimodule-compatibility", *mod.left * kron(ia, *mod.right) == *mod.right * kron(*mod.left, ia));
  }
  return report;
}

ModuleObj regular_module(const AlgObj& a, Side side) {
  ModuleObj mod{a, a.carrier, side, std::nullopt, std::nullopt};
  if (side != Side::right) mod.left = a.m;
  if (side != Side::left) mod.right = a.m;
  return mod;
}

ValidationReport check_weak_ideal(const WeakIdeal& ideal) {
  const ModuleObj& mod = ideal.module;
  const AlgObj& a = mod.algebra;
  require_shape(ideal.phi, a.dim(), mod.carrier.dim(), "weak ideal map");
  ValidationReport report;
  report.merge(check_algebra_module(mod), "module/");
  report.add("phi-morphism", is_equivariant(mod.carrier, a.carrier, ideal.phi));
  if (mod.left) {
    report.add("left-intertwining",
               ideal.phi * *mod.left == a.m * kron(Matrix::identity(a.dim()), ideal.phi));
  }
  if (mod.right) {
    report.add("right-intertwining",
               ideal.phi * *mod.right == a.m * kron(ideal.phi, Matrix::identity(a.dim())));
  }
  return report;
}

bool is_monic(const WeakIdeal& ideal) { return rank(ideal.phi) == ideal.phi.cols(); }

WeakIdeal ideal_from_subspace(const AlgObj& a, const Matrix& basis, Side side) {
  const std::size_t d = a.dim(), k = basis.cols();
  require_shape(basis, d, k, "ideal basis");
  if (rank(basis) != k) throw MalformedInput("ideal basis columns are dependent");
  ModuleObj mod{a, sub_obj(a.carrier, basis), side, std::nullopt, std::nullopt};
  if (side != Side::right) {
    Matrix l(k, d * k);
    for (std::size_t i = 0; i < d; ++i) {
      auto c = coordinates(basis, left_mult(a, Matrix::unit_column(d, i)) * basis);
      if (!c) throw PreconditionViolation("subspace is not a left ideal");
      l.set_block(0, i * k, *c);
    }
    mod.left = std::move(l);
  }
  if (side != Side::left) {
    Matrix r(k, k * d);
    for (std::size_t i = 0; i < d; ++i) {
      auto c = coordinates(basis, right_mult(a, Matrix::unit_column(d, i)) * basis);
      if (!c) throw PreconditionViolation("subspace is not a right ideal");
      // Column j·d + i of r is x_j·e_i.
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t row = 0; row < k; ++row) r(row, j * d + i) = (*c)(row, j);
      }
    }
    mod.right = std::move(r);
  }
  return {std::move(mod), basis};
}

Matrix generated_ideal(const AlgObj& a, const Matrix& generators) {
  const std::size_t d = a.dim();
  Matrix basis = column_space(generators);
  const auto lm = left_mult_all(a);
  std::vector<Matrix> rm;
  for (std::size_t i = 0; i < d; ++i) rm.push_back(right_mult(a, Matrix::unit_column(d, i)));
  for (;;) {
    if (basis.cols() == 0) return Matrix(d, 0);
    Matrix all = basis;
    for (std::size_t i = 0; i < d; ++i) all = hstack(hstack(all, lm[i] * basis), rm[i] * basis);
    for (const auto& act : a.carrier.actions()) all = hstack(all, act * basis);
    Matrix next = column_space(all);
    if (next.cols() == basis.cols()) return basis;
    basis = std::move(next);
  }
}

QuotientAlgebra quotient_algebra(const AlgObj& a, const WeakIdeal& ideal) {
  if (ideal.module.side != Side::bi) {
    throw PreconditionViolation("quotient requires a two-sided weak ideal");
  }
  const auto report = check_weak_ideal(ideal);
  if (!report.ok()) {
    std::string msg = "not a two-sided weak ideal:";
    for (const auto& f : report.failures()) msg += " " + f;
    throw PreconditionViolation(msg);
  }
  const std::size_t d = a.dim();
  const Matrix image = ideal.phi.cols() == 0 ? Matrix(d, 0) : column_space(ideal.phi);
  auto maps = relative_complement(image, Matrix::identity(d));
  QuotientAlgebra q;
  q.algebra.carrier = quotient_obj(a.carrier, maps.projection, maps.section);
  q.algebra.m = maps.projection * a.m * kron(maps.section, maps.section);
  q.algebra.u = maps.projection * a.u;
  q.projection = std::move(maps.projection);
  q.section = std::move(maps.section);
  return q;
}

}  // namespace frobcat

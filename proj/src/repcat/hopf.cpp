#include "frobcat/repcat/hopf.hpp"

#include <string>
#include <utility>

#include "frobcat/error.hpp"
#include "frobcat/exactla/linalg.hpp"
#include "frobcat/exactla/wedge.hpp"

namespace frobcat {
namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw MalformedInput(std::string("hopf ") + what + ": expected " + std::to_string(rows) +
                         "x" + std::to_string(cols) + ", got " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()));
  }
}

void check_shapes(const HopfData& h) {
  const std::size_t n = h.dim;
  if (n == 0) throw MalformedInput("hopf: dimension must be positive");
  require_shape(h.mult, n, n * n, "mult");
  require_shape(h.unit, n, 1, "unit");
  require_shape(h.comult, n * n, n, "comult");
  require_shape(h.counit, 1, n, "counit");
  require_shape(h.antipode, n, n, "antipode");
  require_shape(h.rmatrix, n * n, 1, "rmatrix");
}

Matrix power_unit(const HopfData& h, std::size_t k) {
  Matrix out = Matrix::identity(1);
  for (std::size_t i = 0; i < k; ++i) out = kron(out, h.unit);
  return out;
}

// Places the two legs of an element of H⊗H into slots (a, b) of H⊗H⊗H with
// the unit in the remaining slot.
Matrix embed_legs(const HopfData& h, const Matrix& r, std::size_t a, std::size_t b) {
  const std::size_t n = h.dim;
  Matrix out(n * n * n, 1);
  const std::size_t other = 3 - a - b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(r(i * n + j, 0)) == 0) continue;
      for (std::size_t e = 0; e < n; ++e) {
        if (sgn(h.unit(e, 0)) == 0) continue;
        std::size_t idx[3];
        idx[a] = i;
        idx[b] = j;
        idx[other] = e;
        out((idx[0] * n + idx[1]) * n + idx[2], 0) += r(i * n + j, 0) * h.unit(e, 0);
      }
    }
  }
  return out;
}

}  // namespace

HopfPtr make_hopf(HopfData data) {
  check_shapes(data);
  return std::make_shared<const HopfData>(std::move(data));
}

bool same_category(const HopfData& a, const HopfData& b) {
  if (&a == &b) return true;
  return a.dim == b.dim && a.mult == b.mult && a.unit == b.unit && a.comult == b.comult &&
         a.counit == b.counit && a.antipode == b.antipode && a.rmatrix == b.rmatrix;
}

Matrix tensor_power_multiply(const HopfData& h, std::size_t k, const Matrix& x, const Matrix& y) {
  const std::size_t n = h.dim;
  std::size_t size = 1;
  for (std::size_t i = 0; i < k; ++i) size *= n;
  if (x.rows() != size || y.rows() != size || x.cols() != 1 || y.cols() != 1) {
    throw MalformedInput("tensor_power_multiply: operand shape");
  }
  // Sparse columns of the structure constants.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> prod(n * n);
  for (std::size_t ij = 0; ij < n * n; ++ij)
    for (std::size_t r = 0; r < n; ++r)
      if (sgn(h.mult(r, ij)) != 0) prod[ij].emplace_back(r, h.mult(r, ij));

  Matrix out(size, 1);
  std::vector<std::pair<std::size_t, Rational>> acc, next;
  for (std::size_t I = 0; I < size; ++I) {
    if (sgn(x(I, 0)) == 0) continue;
    for (std::size_t J = 0; J < size; ++J) {
      if (sgn(y(J, 0)) == 0) continue;
      acc.assign(1, {0, x(I, 0) * y(J, 0)});
      std::size_t stride = size;
      for (std::size_t t = 0; t < k && !acc.empty(); ++t) {
        stride /= n;
        const std::size_t i = (I / stride) % n, j = (J / stride) % n;
        next.clear();
        for (const auto& [idx, c] : acc)
          for (const auto& [r, coeff] : prod[i * n + j]) next.emplace_back(idx * n + r, c * coeff);
        acc.swap(next);
      }
      for (const auto& [idx, c] : acc) out(idx, 0) += c;
    }
  }
  return out;
}

Matrix iterated_comult(const HopfData& h, std::size_t k, std::size_t index) {
  if (k == 0) throw MalformedInput("iterated_comult: k must be positive");
  Matrix v = Matrix::unit_column(h.dim, index);
  std::size_t width = 1;
  for (std::size_t step = 1; step < k; ++step) {
    // Apply Δ to the last leg.
    Matrix lift = kron(Matrix::identity(width), h.comult);
    v = lift * v;
    width *= h.dim;
  }
  return v;
}

Matrix inverse_antipode(const HopfData& h) {
  auto inv = inverse(h.antipode);
  if (!inv) throw MalformedInput("hopf antipode is not invertible");
  return *inv;
}

ValidationReport validate_hopf(const HopfData& h) {
  check_shapes(h);
  const std::size_t n = h.dim;
  const Matrix id = Matrix::identity(n);
  ValidationReport report;

  report.add("associativity", h.mult * kron(h.mult, id) == h.mult * kron(id, h.mult));
  report.add("unitality", h.mult * kron(h.unit, id) == id && h.mult * kron(id, h.unit) == id);
  report.add("coassociativity", kron(h.comult, id) * h.comult == kron(id, h.comult) * h.comult);
  report.add("counitality",
             kron(h.counit, id) * h.comult == id && kron(id, h.counit) * h.comult == id);

  bool comult_mult = true;
  for (std::size_t i = 0; i < n && comult_mult; ++i) {
    for (std::size_t j = 0; j < n && comult_mult; ++j) {
      const Matrix lhs = h.comult * h.mult.col(i * n + j);
      const Matrix rhs = tensor_power_multiply(h, 2, h.comult.col(i), h.comult.col(j));
      comult_mult = lhs == rhs;
    }
  }
  report.add("comult-multiplicative", comult_mult);
  report.add("comult-unital", h.comult * h.unit == kron(h.unit, h.unit));
  report.add("counit-multiplicative", h.counit * h.mult == kron(h.counit, h.counit));
  report.add("counit-unital", h.counit * h.unit == Matrix::identity(1));
  const Matrix eta_eps = h.unit * h.counit;
  report.add("antipode", h.mult * kron(h.antipode, id) * h.comult == eta_eps &&
                             h.mult * kron(id, h.antipode) * h.comult == eta_eps);
  report.add("antipode-invertible", sgn(determinant(h.antipode)) != 0);

  const Matrix& r = h.rmatrix;
  const Matrix r13 = embed_legs(h, r, 0, 2), r23 = embed_legs(h, r, 1, 2),
               r12 = embed_legs(h, r, 0, 1);
  report.add("quasitriangular-delta-left",
             kron(h.comult, id) * r == tensor_power_multiply(h, 3, r13, r23));
  report.add("quasitriangular-delta-right",
             kron(id, h.comult) * r == tensor_power_multiply(h, 3, r13, r12));
  const Matrix flip = flip_matrix(n, n);
  bool conj = true;
  for (std::size_t i = 0; i < n && conj; ++i) {
    const Matrix d = h.comult.col(i);
    conj = tensor_power_multiply(h, 2, flip * d, r) == tensor_power_multiply(h, 2, r, d);
  }
  report.add("quasitriangular-conjugation", conj);
  report.add("triangularity", tensor_power_multiply(h, 2, flip * r, r) == power_unit(h, 2));
  return report;
}

HopfPtr group_algebra(const Group& group, std::optional<std::size_t> u) {
  if (u) {
    if (*u >= group.order() || group.mul(*u, *u) != group.identity() || !group.is_central(*u)) {
      throw MalformedInput("u must be a central element with u² = 1");
    }
  }
  std::vector<Matrix> trivial(group.order(), Matrix(0, 0));
  return lambda_smash(group, u.value_or(group.identity()), std::move(trivial));
}

HopfPtr vec_hopf() {
  static const HopfPtr vec = group_algebra(Group::trivial());
  return vec;
}

HopfPtr super_hopf() { return group_algebra(Group::cyclic(2), 1); }

HopfPtr lambda_smash(const Group& group, std::size_t u, std::vector<Matrix> w_action) {
  const std::size_t g_order = group.order();
  if (w_action.size() != g_order) throw MalformedInput("need one W matrix per group element");
  if (u >= g_order) throw MalformedInput("u out of range");
  const std::size_t m = w_action[0].rows();
  for (const auto& a : w_action) {
    if (a.rows() != m || a.cols() != m) throw MalformedInput("W action matrices must be square");
  }
  if (m > 8) throw MalformedInput("odd part too large");
  for (std::size_t a = 0; a < g_order; ++a)
    for (std::size_t b = 0; b < g_order; ++b)
      if (w_action[a] * w_action[b] != w_action[group.mul(a, b)]) {
        throw MalformedInput("W action is not a representation");
      }
  const bool with_u = u != group.identity() || m > 0;
  if (with_u) {
    if (group.mul(u, u) != group.identity()) throw MalformedInput("u² ≠ 1");
    if (!group.is_central(u)) throw MalformedInput("u is not central");
    if (w_action[u] != -Matrix::identity(m)) throw MalformedInput("u does not act by -1 on W");
  }

  SmashLayout layout{group, std::nullopt, m, w_action};
  if (u != group.identity()) layout.u = u;
  const std::size_t subsets = std::size_t{1} << m;
  const std::size_t n = subsets * g_order;
  HopfData h;
  h.dim = n;

  std::vector<Matrix> wedge_g;
  for (std::size_t g = 0; g < g_order; ++g) wedge_g.push_back(exterior_power_matrix(w_action[g]));

  // (w_S g)(w_T k) = w_S ∧ (g·w_T) · gk
  h.mult = Matrix(n, n * n);
  for (unsigned s = 0; s < subsets; ++s)
    for (std::size_t g = 0; g < g_order; ++g)
      for (unsigned t = 0; t < subsets; ++t)
        for (std::size_t k = 0; k < g_order; ++k) {
          const std::size_t col = layout.index(s, g) * n + layout.index(t, k);
          for (unsigned t2 = 0; t2 < subsets; ++t2) {
            const Rational& c = wedge_g[g](t2, t);
            if (sgn(c) == 0) continue;
            const int sign = wedge_sign(s, t2);
            if (sign == 0) continue;
            h.mult(layout.index(s | t2, group.mul(g, k)), col) += sign * c;
          }
        }
  h.unit = Matrix::unit_column(n, layout.index(0, group.identity()));
  h.counit = Matrix(1, n);
  for (std::size_t g = 0; g < g_order; ++g) h.counit(0, layout.index(0, g)) = 1;

  const std::size_t e = group.identity();
  auto basis = [&](unsigned s, std::size_t g) { return Matrix::unit_column(n, layout.index(s, g)); };
  auto product = [&](const Matrix& x, const Matrix& y) { return tensor_power_multiply(h, 1, x, y); };

  // Δ and S on generators, extended multiplicatively (anti- for S).
  std::vector<Matrix> delta_w, antipode_w;
  for (std::size_t i = 0; i < m; ++i) {
    const unsigned bit = 1u << i;
    delta_w.push_back(kron(basis(bit, e), basis(0, e)) + kron(basis(0, u), basis(bit, e)));
    antipode_w.push_back(-product(basis(0, u), basis(bit, e)));
  }
  h.comult = Matrix(n * n, n);
  h.antipode = Matrix(n, n);
  for (unsigned s = 0; s < subsets; ++s) {
    for (std::size_t g = 0; g < g_order; ++g) {
      Matrix d = kron(basis(0, e), basis(0, e));
      Matrix anti = basis(0, e);
      for (std::size_t i = 0; i < m; ++i) {
        if (!(s & (1u << i))) continue;
        d = tensor_power_multiply(h, 2, d, delta_w[i]);
        anti = product(antipode_w[i], anti);
      }
      d = tensor_power_multiply(h, 2, d, kron(basis(0, g), basis(0, g)));
      anti = product(basis(0, group.inverse(g)), anti);
      h.comult.set_block(0, layout.index(s, g), d);
      h.antipode.set_block(0, layout.index(s, g), anti);
    }
  }

  // R = 1⊗1, or R_u = ½(1⊗1 + 1⊗u + u⊗1 − u⊗u).
  h.rmatrix = Matrix(n * n, 1);
  const std::size_t one = layout.index(0, e);
  if (u == e) {
    h.rmatrix(one * n + one, 0) = 1;
  } else {
    const std::size_t uu = layout.index(0, u);
    const Rational half(1, 2);
    h.rmatrix(one * n + one, 0) += half;
    h.rmatrix(one * n + uu, 0) += half;
    h.rmatrix(uu * n + one, 0) += half;
    h.rmatrix(uu * n + uu, 0) -= half;
  }
  h.layout = std::move(layout);
  return make_hopf(std::move(h));
}

}  // namespace frobcat

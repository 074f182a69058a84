#include "frobcat/exactla/linalg.hpp"

#include <algorithm>
#include <utility>

#include "frobcat/error.hpp"

namespace frobcat {

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Rational factor;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && sgn(a(sel, col)) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) {
      if (sgn(a(row, c)) != 0) a(row, c) *= inv;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (sgn(a(row, c)) != 0) a(r, c) -= factor * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (sgn(r(i, free[k])) != 0) basis(pivots[i], k) = -r(i, free[k]);
    }
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) {
    throw MalformedInput("solve: matrix has " + std::to_string(m.rows()) +
                         " rows but right-hand side has " + std::to_string(b.rows()));
  }
  const auto [r, pivots] = rref(hstack(m, b));
  for (auto p : pivots) {
    if (p >= m.cols()) return std::nullopt;
  }
  Matrix x(m.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[i], c) = r(i, m.cols() + c);
  return x;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw MalformedInput("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Clear denominators row by row, then run Bareiss over the integers.
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a[sel * n + k] == 0) ++sel;
      if (sel == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[sel * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * n + k];
  }
  Rational det(a[n * n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  const auto [r, pivots] = rref(hstack(m, Matrix::identity(n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return r.block(0, n, n, n);
}

Matrix column_space(const Matrix& m) {
  const auto [r, pivots] = rref(m.transpose());
  return r.block(0, 0, pivots.size(), m.rows()).transpose();
}

bool in_span(const Matrix& basis, const Matrix& vectors) {
  if (vectors.cols() == 0) return true;
  if (basis.cols() == 0) return vectors.is_zero();
  return solve(basis, vectors).has_value();
}

Matrix annihilator(const Matrix& basis) {
  return kernel_basis(basis.transpose()).transpose();
}

ComplementMaps relative_complement(const Matrix& inner, const Matrix& outer) {
  if (inner.rows() != outer.rows()) throw MalformedInput("relative_complement: ambient dimensions differ");
  const std::size_t n = outer.rows();
  if (!in_span(outer, inner)) throw PreconditionViolation("relative_complement: inner span not contained in outer");
  const RrefResult in = rref(inner.transpose());
  const RrefResult out = rref(outer.transpose());
  ComplementMaps maps;
  std::vector<std::size_t> new_rows;
  for (std::size_t r = 0; r < out.pivots.size(); ++r) {
    const std::size_t p = out.pivots[r];
    if (std::find(in.pivots.begin(), in.pivots.end(), p) == in.pivots.end()) {
      maps.pivots.push_back(p);
      new_rows.push_back(r);
    }
  }
  const std::size_t k = maps.pivots.size();
  maps.projection = Matrix(k, n);
  maps.section = Matrix(n, k);
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t p = maps.pivots[a];
    maps.projection(a, p) = 1;
    for (std::size_t q = 0; q < in.pivots.size(); ++q) {
      maps.projection(a, in.pivots[q]) -= in.reduced(q, p);
    }
    for (std::size_t i = 0; i < n; ++i) maps.section(i, a) = out.reduced(new_rows[a], i);
  }
  return maps;
}

}  // namespace frobcat

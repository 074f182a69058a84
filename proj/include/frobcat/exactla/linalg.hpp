#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "frobcat/exactla/matrix.hpp"

namespace frobcat {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Unique reduced row echelon form.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the null space; one column per free variable, with
/// a 1 in that variable's slot.
Matrix kernel_basis(const Matrix& m);

/// Some x with m·x = b (free variables set to zero), or nullopt when the system
/// is inconsistent. `b` may carry several right-hand sides as columns.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// Fraction-free (Bareiss) determinant.
Rational determinant(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Linearly independent columns spanning the column space of m, in reduced
/// form: the transpose of the nonzero rows of rref(mᵀ).
Matrix column_space(const Matrix& m);

/// True iff every column of `vectors` lies in the column span of `basis`.
bool in_span(const Matrix& basis, const Matrix& vectors);

/// Rows spanning the annihilator {y : y·basis = 0}.
Matrix annihilator(const Matrix& basis);

/// Coordinates on span(outer)/span(inner) for nested column spans in k^n.
/// The complement is spanned by the reduced rows of outer whose pivots are not
/// pivots of inner; projection·section = id and projection kills inner.
struct ComplementMaps {
  Matrix projection;  // k × n
  Matrix section;     // n × k
  std::vector<std::size_t> pivots;  // the new pivot coordinates
};
ComplementMaps relative_complement(const Matrix& inner, const Matrix& outer);

}  // namespace frobcat

#pragma once

#include <bit>
#include <cstddef>
#include <vector>

#include "frobcat/exactla/linalg.hpp"

namespace frobcat {

// Monomials of an exterior algebra on m generators are indexed by bitmasks;
// bit i set means w_i occurs, factors always in increasing index order.

/// Sign of w_S ∧ w_T relative to w_{S∪T}; zero when S and T overlap.
inline int wedge_sign(unsigned s, unsigned t) {
  if (s & t) return 0;
  int swaps = 0;
  for (unsigned rest = t; rest; rest &= rest - 1) {
    const unsigned bit = rest & (~rest + 1);
    // Generators of S with a larger index than this generator of T.
    swaps += std::popcount(s & ~(bit | (bit - 1)));
  }
  return swaps % 2 ? -1 : 1;
}

/// Λ(L) on the bitmask basis: entry (S, T) is the minor of L on rows S and
/// columns T when |S| = |T|, zero otherwise.
inline Matrix exterior_power_matrix(const Matrix& l) {
  const std::size_t m = l.rows();
  const std::size_t size = std::size_t{1} << m;
  Matrix out(size, size);
  for (unsigned s = 0; s < size; ++s) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < m; ++i)
      if (s & (1u << i)) rows.push_back(i);
    for (unsigned t = 0; t < size; ++t) {
      if (std::popcount(s) != std::popcount(t)) continue;
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < m; ++i)
        if (t & (1u << i)) cols.push_back(i);
      out(s, t) = determinant(l.select_rows(rows).select_columns(cols));
    }
  }
  return out;
}

}  // namespace frobcat

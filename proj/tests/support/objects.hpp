#pragma once

#include <random>
#include <vector>

#include "frobcat/exactla/linalg.hpp"
#include "frobcat/repcat/object.hpp"
#include "support/random_matrix.hpp"

namespace frobcat::testing {

/// Invertible matrix with small entries.
inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix p = random_matrix(rng, n, n, 2);
    if (sgn(determinant(p)) != 0) return p;
  }
}

/// Same module seen in a random basis.
inline Obj conjugate(const Obj& x, const Matrix& p) {
  const Matrix p_inv = *inverse(p);
  std::vector<Matrix> action;
  for (const auto& a : x.actions()) action.push_back(p * a * p_inv);
  return Obj(x.hopf(), std::move(action));
}

/// Module over Λ(W)#kG from the group matrices and the matrices of the odd
/// generators; basis element w_S·g acts as ρ(w_s1)···ρ(w_sk)·ρ(g).
inline Obj smash_module(const HopfPtr& hopf, const std::vector<Matrix>& group_mats,
                        const std::vector<Matrix>& odd_mats) {
  const auto& layout = *hopf->layout;
  std::vector<Matrix> action(hopf->dim);
  for (unsigned s = 0; s < (1u << layout.odd_dim); ++s)
    for (std::size_t g = 0; g < layout.group.order(); ++g) {
      Matrix a = Matrix::identity(group_mats[0].rows());
      for (std::size_t i = 0; i < layout.odd_dim; ++i)
        if (s & (1u << i)) a = a * odd_mats[i];
      action[layout.index(s, g)] = a * group_mats[g];
    }
  return Obj(hopf, std::move(action));
}

/// Z/2 representation where the generator acts by the given signs.
inline Obj z2_signs(const HopfPtr& hopf, std::vector<int> signs) {
  Matrix u(signs.size(), signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) u(i, i) = signs[i];
  return Obj(hopf, {Matrix::identity(signs.size()), u});
}

}  // namespace frobcat::testing

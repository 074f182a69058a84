#include "frobcat/algebra/functors.hpp"

#include <string>
#include <utility>

#include "frobcat/error.hpp"
#include "frobcat/exactla/linalg.hpp"

namespace frobcat {

namespace {

const SmashLayout& layout_of(const HopfPtr& h, const char* what) {
  if (!h->layout) throw PreconditionViolation(std::string(what) + ": Hopf algebra has no group layout");
  return *h->layout;
}

// `embedding` must be an injective homomorphism small → big.
void check_embedding(const Group& small, const Group& big, const std::vector<std::size_t>& embedding) {
  if (embedding.size() != small.order()) throw MalformedInput("embedding: wrong number of elements");
  std::vector<bool> seen(big.order(), false);
  for (std::size_t e : embedding) {
    if (e >= big.order() || seen[e]) throw MalformedInput("embedding: not injective");
    seen[e] = true;
  }
  for (std::size_t a = 0; a < small.order(); ++a) {
    for (std::size_t b = 0; b < small.order(); ++b) {
      if (embedding[small.mul(a, b)] != big.mul(embedding[a], embedding[b])) {
        throw MalformedInput("embedding: not a homomorphism");
      }
    }
  }
}

Matrix end_multiplication(std::size_t n) {
  const std::size_t d = n * n;
  Matrix m(d, d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) m(i * n + l, (i * n + j) * d + (j * n + l)) = 1;
  return m;
}

AlgObj end_from_carrier(Obj carrier, std::size_t n) {
  const std::size_t d = n * n;
  Matrix u(d, 1), comult(d * d, d), counit(1, d);
  for (std::size_t i = 0; i < n; ++i) {
    u(i * n + i, 0) = 1;
    counit(0, i * n + i) = 1;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) comult((i * n + k) * d + (k * n + j), i * n + j) = 1;
  }
  return {std::move(carrier), end_multiplication(n), std::move(u), std::move(comult), std::move(counit)};
}

}  // namespace

AlgObj end_algebra(const Obj& v) {
  const HopfData& h = *v.hopf();
  if (h.antipode * h.antipode != Matrix::identity(h.dim)) {
    throw PreconditionViolation("end_algebra: the antipode is not involutive");
  }
  const std::size_t n = v.dim(), dh = h.dim;
  std::vector<Matrix> s_action;
  for (std::size_t b = 0; b < dh; ++b) s_action.push_back(v.act_element(h.antipode.col(b)).transpose());
  std::vector<Matrix> action;
  for (std::size_t e = 0; e < dh; ++e) {
    Matrix rho(n * n, n * n);
    for (std::size_t a = 0; a < dh; ++a)
      for (std::size_t b = 0; b < dh; ++b) {
        const Rational& c = h.comult(a * dh + b, e);
        if (sgn(c) != 0) rho += c * kron(v.act(a), s_action[b]);
      }
    action.push_back(std::move(rho));
  }
  return end_from_carrier(Obj(v.hopf(), std::move(action)), n);
}

AlgObj end_algebra_twisted(const HopfPtr& hopf, const std::vector<Matrix>& sigma, const CocycleTable& psi) {
  const auto& layout = layout_of(hopf, "end_algebra_twisted");
  if (layout.odd_dim != 0) throw PreconditionViolation("end_algebra_twisted: needs a group algebra");
  const Group& g = layout.group;
  const std::size_t order = g.order();
  if (sigma.size() != order || psi.size() != order) throw MalformedInput("cocycle: wrong table size");
  for (const auto& row : psi) {
    if (row.size() != order) throw MalformedInput("cocycle: wrong table size");
    for (const auto& x : row)
      if (sgn(x) == 0) throw MalformedInput("cocycle: zero entry");
  }
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c) {
        if (psi[a][b] * psi[g.mul(a, b)][c] != psi[b][c] * psi[a][g.mul(b, c)]) {
          throw MalformedInput("cocycle: 2-cocycle condition fails");
        }
      }
  const std::size_t n = sigma.empty() ? 0 : sigma[0].rows();
  std::vector<Matrix> inv;
  for (const auto& s : sigma) {
    if (s.rows() != n || s.cols() != n) throw MalformedInput("projective representation: bad matrix shape");
    auto i = inverse(s);
    if (!i) throw MalformedInput("projective representation: singular matrix");
    inv.push_back(std::move(*i));
  }
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      if (sigma[a] * sigma[b] != psi[a][b] * sigma[g.mul(a, b)]) {
        throw MalformedInput("projective representation: relation with the cocycle fails");
      }
    }
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < order; ++a) action.push_back(kron(sigma[a], inv[a].transpose()));
  return end_from_carrier(Obj(hopf, std::move(action)), n);
}

Obj restrict_obj(const Obj& x, const HopfPtr& target, const std::vector<std::size_t>& embedding) {
  const auto& src = layout_of(x.hopf(), "restrict");
  const auto& dst = layout_of(target, "restrict");
  check_embedding(dst.group, src.group, embedding);
  if (src.odd_dim != dst.odd_dim) throw PreconditionViolation("restrict: odd parts differ");
  for (std::size_t h = 0; h < dst.group.order(); ++h) {
    if (dst.odd_action[h] != src.odd_action[embedding[h]]) {
      throw PreconditionViolation("restrict: odd parts differ");
    }
  }
  std::vector<Matrix> action(target->dim);
  for (unsigned s = 0; s < (1u << dst.odd_dim); ++s)
    for (std::size_t h = 0; h < dst.group.order(); ++h) action[dst.index(s, h)] = x.act(src.index(s, embedding[h]));
  return Obj(target, std::move(action));
}

AlgObj restrict_algebra(const AlgObj& a, const HopfPtr& target, const std::vector<std::size_t>& embedding) {
  AlgObj out = a;
  out.carrier = restrict_obj(a.carrier, target, embedding);
  return out;
}

AlgObj induce(const AlgObj& a, const HopfPtr& target, const std::vector<std::size_t>& embedding) {
  const auto& src = layout_of(a.hopf(), "induce");
  const auto& dst = layout_of(target, "induce");
  check_embedding(src.group, dst.group, embedding);
  if (src.u && dst.u && embedding[*src.u] != *dst.u) {
    throw PreconditionViolation("induce: the involutions u do not correspond");
  }
  const std::size_t da = a.dim();

  if (src.odd_dim == 0 && dst.odd_dim > 0) {
    if (src.group.order() != dst.group.order()) {
      throw PreconditionViolation("induce: adding odd generators needs the same group");
    }
    std::vector<std::size_t> back(dst.group.order());
    for (std::size_t h = 0; h < embedding.size(); ++h) back[embedding[h]] = h;
    std::vector<Matrix> action(target->dim, Matrix(da, da));
    for (std::size_t g = 0; g < dst.group.order(); ++g) action[dst.index(0, g)] = a.carrier.act(back[g]);
    AlgObj out = a;
    out.carrier = Obj(target, std::move(action));
    return out;
  }
  if (src.odd_dim != dst.odd_dim) throw PreconditionViolation("induce: unsupported change of odd part");
  for (std::size_t h = 0; h < src.group.order(); ++h) {
    if (src.odd_action[h] != dst.odd_action[embedding[h]]) {
      throw PreconditionViolation("induce: odd parts do not restrict correctly");
    }
  }

  const CosetDecomposition cosets(dst.group, embedding);
  const std::size_t nc = cosets.count(), dim = nc * da, w = dst.odd_dim;
  // odd[c][i]: action of r_c⁻¹·w_i on A.
  std::vector<std::vector<Matrix>> odd(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    const Matrix& rho_w = dst.odd_action[dst.group.inverse(cosets.rep(c))];
    for (std::size_t i = 0; i < w; ++i) {
      Matrix t(da, da);
      for (std::size_t l = 0; l < w; ++l) {
        if (sgn(rho_w(l, i)) != 0) t += rho_w(l, i) * a.carrier.act(src.index(1u << l, src.group.identity()));
      }
      odd[c].push_back(std::move(t));
    }
  }
  std::vector<Matrix> action;
  for (unsigned s = 0; s < (1u << w); ++s) {
    for (std::size_t g = 0; g < dst.group.order(); ++g) {
      Matrix rho(dim, dim);
      for (std::size_t c = 0; c < nc; ++c) {
        const auto [c2, k] = cosets.act(g, c);
        Matrix block = a.carrier.act(src.index(0, k));
        for (std::size_t i = w; i-- > 0;) {
          if (s & (1u << i)) block = odd[c2][i] * block;
        }
        rho.set_block(c2 * da, c * da, block);
      }
      action.push_back(std::move(rho));
    }
  }
  // action was filled in (s, g) order, which is the layout index order.
  AlgObj out;
  out.carrier = Obj(target, std::move(action));
  out.m = Matrix(dim, dim * dim);
  out.u = Matrix(dim, 1);
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t i = 0; i < da; ++i) {
      out.u(c * da + i, 0) = a.u(i, 0);
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t k = 0; k < da; ++k) out.m(c * da + k, (c * da + i) * dim + (c * da + j)) = a.m(k, i * da + j);
    }
  }
  return out;
}

}  // namespace frobcat

#include "frobcat/constructions/constructions.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>

#include "frobcat/error.hpp"
#include "frobcat/frobenius/frobenius.hpp"

namespace frobcat {

namespace {

std::string failure_list(const ValidationReport& r) {
  std::string s;
  for (const auto& f : r.failures()) s += " " + f;
  return s;
}

// Rewrites a word in the generators to sorted monomials using
// w_j w_i = −w_i w_j + 2B(w_i, w_j) for i < j and w_i w_i = B(w_i, w_i).
void reduce_word(std::vector<std::size_t> word, const Rational& coef, const Matrix& b,
                 std::map<unsigned, Rational>& out) {
  if (sgn(coef) == 0) return;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] < word[i + 1]) continue;
    std::vector<std::size_t> shorter(word.begin(), word.begin() + i);
    shorter.insert(shorter.end(), word.begin() + i + 2, word.end());
    if (word[i] == word[i + 1]) {
      reduce_word(std::move(shorter), coef * b(word[i], word[i]), b, out);
    } else {
      const Rational pair = 2 * b(word[i + 1], word[i]);
      std::swap(word[i], word[i + 1]);
      reduce_word(std::move(word), -coef, b, out);
      reduce_word(std::move(shorter), coef * pair, b, out);
    }
    return;
  }
  unsigned mask = 0;
  for (auto g : word) mask |= 1u << g;
  out[mask] += coef;
}

std::vector<std::size_t> word_of(unsigned mask) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; mask >> i; ++i)
    if (mask & (1u << i)) w.push_back(i);
  return w;
}

// Structure constants of Cl(k^m, B) on the sorted monomial basis, with H
// acting through Δ^{(k−1)} on words of length k.
AlgObj word_algebra(const Obj& w, const Matrix& b) {
  const std::size_t m = w.dim();
  if (m > 8) throw MalformedInput("too many generators");
  const auto order = monomial_order(m);
  const std::size_t d = order.size();
  std::vector<std::size_t> index(d);
  for (std::size_t i = 0; i < d; ++i) index[order[i]] = i;

  Matrix mult(d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      auto word = word_of(order[x]);
      const auto tail = word_of(order[y]);
      word.insert(word.end(), tail.begin(), tail.end());
      std::map<unsigned, Rational> nf;
      reduce_word(std::move(word), 1, b, nf);
      for (const auto& [mask, c] : nf) mult(index[mask], x * d + y) = c;
    }
  const Matrix unit = Matrix::unit_column(d, 0);
  AlgObj plain{Obj::trivial(w.hopf(), d), mult, unit, std::nullopt, std::nullopt};

  const HopfData& h = *w.hopf();
  auto embed = [&](const Matrix& v) {
    Matrix out(d, 1);
    for (std::size_t i = 0; i < m; ++i) out(index[1u << i], 0) = v(i, 0);
    return out;
  };
  std::vector<Matrix> action;
  for (std::size_t e = 0; e < h.dim; ++e) {
    Matrix rho(d, d);
    for (std::size_t col = 0; col < d; ++col) {
      const auto word = word_of(order[col]);
      const std::size_t k = word.size();
      if (k == 0) {
        rho(0, col) = h.counit(0, e);
        continue;
      }
      const Matrix delta = iterated_comult(h, k, e);
      Matrix image(d, 1);
      for (std::size_t idx = 0; idx < delta.rows(); ++idx) {
        if (sgn(delta(idx, 0)) == 0) continue;
        std::vector<std::size_t> parts(k);
        for (std::size_t r = idx, i = k; i-- > 0; r /= h.dim) parts[i] = r % h.dim;
        Matrix prod = unit;
        for (std::size_t i = 0; i < k; ++i) {
          prod = multiply(plain, prod, embed(w.act(parts[i]).col(word[i])));
        }
        image += delta(idx, 0) * prod;
      }
      rho.set_block(0, col, image);
    }
    action.push_back(std::move(rho));
  }
  AlgObj a = make_algebra(Obj(w.hopf(), std::move(action)), std::move(mult), unit);
  const auto report = check_algebra(a);
  if (!report.ok()) {
    throw PreconditionViolation("the action of H does not descend to the quotient algebra:" + failure_list(report));
  }
  return a;
}

std::vector<std::size_t> degree_dims(std::size_t m) {
  std::vector<std::size_t> dims(m + 1, 0);
  for (auto s : monomial_order(m)) ++dims[std::popcount(s)];
  return dims;
}

FilteredObj prefix_filtration(const Obj& carrier, const std::vector<std::size_t>& dims) {
  std::vector<Matrix> steps;
  std::size_t total = 0;
  for (auto k : dims) {
    total += k;
    steps.push_back(Matrix::identity(carrier.dim()).block(0, 0, carrier.dim(), total));
  }
  return make_filtered(carrier, std::move(steps));
}

// Attaches Δ, ε from ν when ν is a morphism with invertible Gram matrix.
void attach_frobenius(AlgObj& a, const Matrix& nu) {
  if (!is_equivariant(a.carrier, Obj::unit(a.hopf()), nu)) return;
  if (!copairing_check(a, nu)) return;
  const auto cert = certificate_from_form(a, nu, "exact-symbolic");
  a.comult = cert.comult;
  a.counit = cert.counit;
}

std::vector<Matrix> group_part(const HopfData& target, const std::vector<Matrix>& per_group, std::size_t dim) {
  const auto& layout = *target.layout;
  std::vector<Matrix> action(target.dim, Matrix(dim, dim));
  for (std::size_t g = 0; g < layout.group.order(); ++g) action[layout.index(0, g)] = per_group[g];
  return action;
}

std::size_t parse_count(const std::string& text, const std::string& name) {
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw MalformedInput("bad size in built-in name " + name);
  return n;
}

}  // namespace

std::vector<unsigned> monomial_order(std::size_t generators) {
  std::vector<unsigned> order(std::size_t{1} << generators);
  for (unsigned s = 0; s < order.size(); ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  return order;
}

BilinearFormData make_bilinear_form(Obj space, Matrix matrix) {
  const std::size_t m = space.dim();
  if (matrix.rows() != m || matrix.cols() != m) throw MalformedInput("bilinear form: wrong shape");
  if (matrix != matrix.transpose()) throw MalformedInput("bilinear form: not symmetric");
  Matrix row(1, m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) row(0, i * m + j) = matrix(i, j);
  if (!is_equivariant(tensor_obj(space, space), Obj::unit(space.hopf()), row)) {
    throw PreconditionViolation("bilinear form: not a morphism W⊗W -> 1");
  }
  return {std::move(space), std::move(matrix)};
}

GradedAlg exterior_algebra(const Obj& w) {
  const std::size_t m = w.dim();
  GradedAlg b{word_algebra(w, Matrix(m, m)), degree_dims(m)};
  attach_frobenius(b.total, Matrix::unit_column(b.total.dim(), b.total.dim() - 1).transpose());
  return b;
}

FilteredAlg clifford_algebra(const Obj& w, const BilinearFormData& b) {
  if (b.space.dim() != w.dim()) throw MalformedInput("bilinear form lives on a different space");
  require_same_category(w, b.space);
  if (!is_equivariant(w, b.space, Matrix::identity(w.dim()))) {
    throw PreconditionViolation("bilinear form was built for a different action on W");
  }
  AlgObj a = word_algebra(w, b.matrix);
  FilteredObj f = prefix_filtration(a.carrier, degree_dims(w.dim()));
  return {std::move(a), std::move(f)};
}

CliffordGraded clifford_gr_isomorphism(const Obj& w, const FilteredAlg& clifford) {
  CliffordGraded out;
  out.graded = gr(clifford);
  out.exterior = exterior_algebra(w);
  const GradedAlg& g = out.graded.graded;
  const std::size_t d = clifford.algebra.dim();
  out.iso = Matrix(d, d);
  for (std::size_t i = 0; i <= g.top(); ++i) {
    if (i > out.exterior.top()) break;
    const Matrix& s = out.graded.sections[i];
    out.iso.set_block(out.exterior.offset(i), g.offset(i),
                      s.block(out.exterior.offset(i), 0, out.exterior.dims[i], s.cols()));
  }
  out.report = verify_graded_isomorphism(g, out.exterior, out.iso);
  return out;
}

GradedAlg truncated_poly(std::size_t n, const HopfPtr& hopf) {
  if (n == 0) throw MalformedInput("truncated polynomial algebra needs n >= 1");
  Matrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) m(i + j, i * n + j) = 1;
  GradedAlg b{make_algebra(Obj::trivial(hopf, n), std::move(m), Matrix::unit_column(n, 0)),
              std::vector<std::size_t>(n, 1)};
  attach_frobenius(b.total, Matrix::unit_column(n, n - 1).transpose());
  return b;
}

FilteredAlg deformed_truncated_poly(std::size_t n, const Rational& c, const HopfPtr& hopf) {
  if (n == 0) throw MalformedInput("truncated polynomial algebra needs n >= 1");
  Matrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i + j < n) {
        m(i + j, i * n + j) = 1;
      } else {
        m(i + j - n, i * n + j) = c;
      }
    }
  AlgObj a = make_algebra(Obj::trivial(hopf, n), std::move(m), Matrix::unit_column(n, 0));
  FilteredObj f = prefix_filtration(a.carrier, std::vector<std::size_t>(n, 1));
  return {std::move(a), std::move(f)};
}

AlgObj matrix_frobenius(std::size_t n, const Obj& v) {
  if (v.dim() != n) throw MalformedInput("matrix algebra: dim V differs from n");
  return end_algebra(v);
}

AlgObj upper_triangular_2(const HopfPtr& hopf) {
  // e0 = E11, e1 = E12, e2 = E22.
  Matrix m(3, 9);
  m(0, 0 * 3 + 0) = 1;
  m(1, 0 * 3 + 1) = 1;
  m(1, 1 * 3 + 2) = 1;
  m(2, 2 * 3 + 2) = 1;
  return make_algebra(Obj::trivial(hopf, 3), std::move(m), Matrix{{1}, {0}, {1}});
}

AlgObj dual_numbers(const HopfPtr& hopf) { return truncated_poly(2, hopf).total; }

RepresentingAlgebra representing_algebra(const RepresentingData& data) {
  const Group& g = data.group;
  if (!g.is_subgroup(data.subgroup)) throw PreconditionViolation("H is not a subgroup of G");
  if (data.u >= g.order() || g.mul(data.u, data.u) != g.identity()) {
    throw PreconditionViolation("u does not have order at most 2");
  }
  if (!g.is_central(data.u)) throw PreconditionViolation("u is not central in G");
  if (data.w_action.size() != g.order()) throw PreconditionViolation("W needs one matrix per element of G");
  const std::size_t wdim = data.w_action[0].rows();
  for (const auto& x : data.w_action) {
    if (x.rows() != wdim || x.cols() != wdim) throw PreconditionViolation("W action matrices must be square");
  }
  if (data.w_action[data.u] != -Matrix::identity(wdim)) throw PreconditionViolation("u does not act by -1 on W");
  if (data.v_action.size() != data.subgroup.size()) throw PreconditionViolation("V needs one matrix per element of H");

  std::vector<std::size_t> gens = data.subgroup;
  gens.push_back(data.u);
  const std::vector<std::size_t> hat = g.generated_subgroup(gens);
  auto local = [&](std::size_t x) {
    return static_cast<std::size_t>(std::find(hat.begin(), hat.end(), x) - hat.begin());
  };
  const Group hat_group = g.subgroup(hat);
  const std::size_t u_hat = local(data.u);
  const std::optional<std::size_t> u_opt =
      data.u == g.identity() ? std::nullopt : std::optional<std::size_t>(u_hat);
  std::vector<std::size_t> h_in_hat;
  for (auto x : data.subgroup) h_in_hat.push_back(local(x));
  std::vector<Matrix> w_hat;
  for (auto x : hat) w_hat.push_back(data.w_action[x]);

  RepresentingAlgebra out;
  const HopfPtr kh = group_algebra(g.subgroup(data.subgroup));
  if (data.psi) {
    out.end_v = end_algebra_twisted(kh, data.v_action, *data.psi);
  } else {
    const Obj v(kh, data.v_action);
    if (!check_module(v).ok()) throw PreconditionViolation("V is not a representation of H");
    out.end_v = end_algebra(v);
  }
  const HopfPtr k_hat = group_algebra(hat_group, u_opt);
  const HopfPtr hat_smash = lambda_smash(hat_group, u_hat, w_hat);
  std::vector<std::size_t> hat_identity(hat.size());
  for (std::size_t i = 0; i < hat.size(); ++i) hat_identity[i] = i;
  out.induced = induce(induce(out.end_v, k_hat, h_in_hat), hat_smash, hat_identity);

  const Obj w(hat_smash, group_part(*hat_smash, w_hat, wdim));
  out.clifford = clifford_algebra(w, make_bilinear_form(w, data.form)).algebra;
  out.product = tensor_algebra_of(out.induced, out.clifford);

  const HopfPtr g_smash = lambda_smash(g, data.u, data.w_action);
  out.algebra = induce(out.product, g_smash, hat);
  const auto report = check_algebra(out.algebra);
  if (!report.ok()) throw InternalFault("representing algebra fails:" + failure_list(report));
  return out;
}

RepresentingData etingof_ostrik_min() {
  RepresentingData d{Group::cyclic(2), {0}, std::nullopt, 1, {Matrix{{1}}, Matrix{{-1}}}, Matrix{{1}}, {Matrix{{1}}}};
  return d;
}

FilteredAlg builtin(const std::string& name) {
  auto fields = [&] {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
      const auto colon = name.find(':', start);
      out.push_back(name.substr(start, colon - start));
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
    return out;
  }();
  auto whole = [](AlgObj a) {
    FilteredObj f = single_step(a.carrier);
    return FilteredAlg{std::move(a), std::move(f)};
  };
  const std::string& kind = fields[0];
  if (kind == "exterior" && fields.size() == 2) {
    const std::size_t n = parse_count(fields[1], name);
    if (n > 5) throw MalformedInput("exterior: at most 5 generators");
    return trivial_filtration(exterior_algebra(Obj::trivial(vec_hopf(), n)));
  }
  if (kind == "clifford" && fields.size() == 3 && (fields[2] == "identity" || fields[2] == "zero")) {
    const std::size_t n = parse_count(fields[1], name);
    if (n > 5) throw MalformedInput("clifford: at most 5 generators");
    const Obj w = Obj::trivial(vec_hopf(), n);
    const Matrix b = fields[2] == "identity" ? Matrix::identity(n) : Matrix(n, n);
    return clifford_algebra(w, make_bilinear_form(w, b));
  }
  if (kind == "truncpoly" && fields.size() == 2) {
    const std::size_t n = parse_count(fields[1], name);
    if (n == 0 || n > 16) throw MalformedInput("truncpoly: n must be between 1 and 16");
    return trivial_filtration(truncated_poly(n));
  }
  if (kind == "matn" && fields.size() == 2) {
    const std::size_t n = parse_count(fields[1], name);
    if (n == 0 || n > 4) throw MalformedInput("matn: n must be between 1 and 4");
    return whole(matrix_frobenius(n, Obj::trivial(vec_hopf(), n)));
  }
  if (name == "dual-numbers") return trivial_filtration(truncated_poly(2));
  if (name == "upper-triangular-2") return whole(upper_triangular_2());
  if (name == "etingof-ostrik-min") return whole(representing_algebra(etingof_ostrik_min()).algebra);
  throw MalformedInput("unknown built-in '" + name + "'");
}

std::vector<std::string> builtin_examples() {
  return {"exterior:1",   "exterior:2", "exterior:3",   "clifford:1:identity", "clifford:2:identity",
          "clifford:3:identity", "truncpoly:1", "truncpoly:3", "matn:1", "matn:2",
          "dual-numbers", "upper-triangular-2", "etingof-ostrik-min"};
}

}  // namespace frobcat

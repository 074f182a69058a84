#include "frobcat/filtration/filtration.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "frobcat/error.hpp"

namespace frobcat {

namespace {

bool stable(const Obj& x, const Matrix& basis) {
  for (const auto& a : x.actions()) {
    if (!in_span(basis, a * basis)) return false;
  }
  return true;
}

std::size_t prefix_sum(const std::vector<std::size_t>& dims, std::size_t i) {
  std::size_t s = 0;
  for (std::size_t k = 0; k < i && k < dims.size(); ++k) s += dims[k];
  return s;
}

Matrix block_diagonal_action(const Matrix& a, const std::vector<ComplementMaps>& pieces) {
  std::vector<Matrix> blocks;
  for (const auto& p : pieces) blocks.push_back(p.projection * a * p.section);
  return direct_sum(blocks);
}

std::vector<ComplementMaps> all_pieces(const FilteredObj& f) {
  std::vector<ComplementMaps> out;
  for (std::size_t i = 0; i <= f.top(); ++i) out.push_back(graded_piece(f, i));
  return out;
}

std::string failure_list(const ValidationReport& r) {
  std::string s;
  for (const auto& f : r.failures()) s += " " + f;
  return s;
}

}  // namespace

FilteredObj make_filtered(Obj ambient, std::vector<Matrix> steps) {
  if (steps.empty()) throw MalformedInput("filtration: no steps");
  const std::size_t d = ambient.dim();
  for (auto& s : steps) {
    if (s.rows() != d) throw MalformedInput("filtration: step has the wrong number of rows");
    s = column_space(s);
  }
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (!in_span(steps[i + 1], steps[i])) {
      throw MalformedInput("filtration: steps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                           " are not nested");
    }
  }
  return {std::move(ambient), std::move(steps)};
}

FilteredObj single_step(const Obj& x) { return make_filtered(x, {Matrix::identity(x.dim())}); }

ValidationReport check_filtered_obj(const FilteredObj& f) {
  ValidationReport report;
  bool nested = true, stab = true;
  for (std::size_t i = 0; i <= f.top(); ++i) {
    if (i > 0 && !in_span(f.steps[i], f.steps[i - 1])) nested = false;
    if (!stable(f.ambient, f.steps[i])) stab = false;
  }
  report.add("nested", nested);
  report.add("steps-stable", stab);
  report.add("exhaustive", f.steps.back().cols() == f.ambient.dim());
  return report;
}

FilteredObj shift_filtration(const FilteredObj& f, std::size_t shift) {
  std::vector<Matrix> steps(shift, Matrix(f.ambient.dim(), 0));
  steps.insert(steps.end(), f.steps.begin(), f.steps.end());
  return {f.ambient, std::move(steps)};
}

FilteredObj induced_filtration(const Obj& source, const Matrix& f, const FilteredObj& target) {
  if (f.rows() != target.ambient.dim() || f.cols() != source.dim()) {
    throw MalformedInput("induced_filtration: map has the wrong shape");
  }
  std::vector<Matrix> steps;
  for (const auto& s : target.steps) steps.push_back(kernel_basis(annihilator(s) * f));
  return make_filtered(source, std::move(steps));
}

FilteredObj tensor_filtered(const FilteredObj& x, const FilteredObj& y) {
  const std::size_t n = x.top() + y.top();
  std::vector<Matrix> steps;
  for (std::size_t k = 0; k <= n; ++k) {
    Matrix all(x.ambient.dim() * y.ambient.dim(), 0);
    for (std::size_t i = 0; i <= std::min(k, x.top()); ++i) {
      const std::size_t j = std::min(k - i, y.top());
      all = hstack(all, kron(x.steps[i], y.steps[j]));
    }
    steps.push_back(std::move(all));
  }
  return make_filtered(tensor_obj(x.ambient, y.ambient), std::move(steps));
}

FilteredObj image_filtration(const Obj& quotient, const Matrix& projection, const FilteredObj& f) {
  std::vector<Matrix> steps;
  for (const auto& s : f.steps) steps.push_back(projection * s);
  return make_filtered(quotient, std::move(steps));
}

bool is_filtered_map(const FilteredObj& x, const FilteredObj& y, const Matrix& f) {
  const std::size_t n = std::max(x.top(), y.top());
  for (std::size_t i = 0; i <= n; ++i) {
    if (!in_span(y.step(i), f * x.step(i))) return false;
  }
  return true;
}

ComplementMaps graded_piece(const FilteredObj& f, std::size_t i) {
  const Matrix inner = i == 0 ? Matrix(f.ambient.dim(), 0) : f.step(i - 1);
  return relative_complement(inner, f.step(i));
}

std::size_t GradedObj::offset(std::size_t i) const { return prefix_sum(dims, i); }

GradedObj gr_obj(const FilteredObj& f) {
  const auto pieces = all_pieces(f);
  std::vector<Matrix> action;
  for (const auto& a : f.ambient.actions()) action.push_back(block_diagonal_action(a, pieces));
  GradedObj out{Obj(f.ambient.hopf(), std::move(action)), {}};
  for (const auto& p : pieces) out.dims.push_back(p.section.cols());
  return out;
}

std::vector<Matrix> gr_mor(const FilteredObj& x, const FilteredObj& y, const Matrix& f) {
  if (f.rows() != y.ambient.dim() || f.cols() != x.ambient.dim()) {
    throw MalformedInput("gr_mor: map has the wrong shape");
  }
  if (!is_filtered_map(x, y, f)) throw PreconditionViolation("gr_mor: map is not filtered");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i <= std::max(x.top(), y.top()); ++i) {
    out.push_back(graded_piece(y, i).projection * f * graded_piece(x, i).section);
  }
  return out;
}

Matrix gr2(const FilteredObj& x, const FilteredObj& y) {
  const FilteredObj t = tensor_filtered(x, y);
  const auto px = all_pieces(x), py = all_pieces(y), pt = all_pieces(t);
  std::vector<std::size_t> dx, dy, dt;
  for (const auto& p : px) dx.push_back(p.section.cols());
  for (const auto& p : py) dy.push_back(p.section.cols());
  for (const auto& p : pt) dt.push_back(p.section.cols());
  const std::size_t ny = y.ambient.dim(), d = x.ambient.dim() * ny;
  Matrix out(d, d);
  for (std::size_t i = 0; i <= x.top(); ++i) {
    for (std::size_t j = 0; j <= y.top(); ++j) {
      const Matrix block = pt[i + j].projection * kron(px[i].section, py[j].section);
      const std::size_t row0 = prefix_sum(dt, i + j), ox = prefix_sum(dx, i), oy = prefix_sum(dy, j);
      for (std::size_t a = 0; a < dx[i]; ++a)
        for (std::size_t b = 0; b < dy[j]; ++b)
          for (std::size_t r = 0; r < block.rows(); ++r) out(row0 + r, (ox + a) * ny + oy + b) = block(r, a * dy[j] + b);
    }
  }
  return out;
}

ValidationReport check_filtered_algebra(const FilteredAlg& a) {
  const FilteredObj& f = a.filtration;
  if (f.ambient.dim() != a.algebra.dim()) throw MalformedInput("filtration and algebra dimensions differ");
  ValidationReport report = check_filtered_obj(f);
  report.add("unit-in-step-0", in_span(f.steps[0], a.algebra.u));
  bool mult = true;
  for (std::size_t i = 0; i <= f.top() && mult; ++i) {
    for (std::size_t j = 0; j <= f.top() && mult; ++j) {
      mult = in_span(f.step(i + j), a.algebra.m * kron(f.steps[i], f.steps[j]));
    }
  }
  report.add("multiplicative", mult);
  return report;
}

ValidationReport check_connected(const FilteredAlg& a) {
  const Matrix& s0 = a.filtration.steps[0];
  ValidationReport report;
  report.add("step-0-one-dimensional", s0.cols() == 1);
  report.add("step-0-spanned-by-unit", s0.cols() == 1 && !a.algebra.u.is_zero() && in_span(s0, a.algebra.u));
  bool trivial = true;
  const auto& h = *a.algebra.hopf();
  for (std::size_t e = 0; e < h.dim; ++e) {
    if (a.algebra.carrier.act(e) * s0 != h.counit(0, e) * s0) trivial = false;
  }
  report.add("step-0-trivial-action", trivial);
  return report;
}

bool is_connected(const FilteredAlg& a) { return check_connected(a).ok(); }

FilteredAlg tensor_filtered_alg(const FilteredAlg& a, const FilteredAlg& b) {
  return {tensor_algebra_of(a.algebra, b.algebra), tensor_filtered(a.filtration, b.filtration)};
}

std::size_t GradedAlg::offset(std::size_t i) const { return prefix_sum(dims, i); }

Matrix GradedAlg::mult_block(std::size_t i, std::size_t j) const {
  const std::size_t k = i + j, d = total.dim();
  const std::size_t rows = k <= top() ? dims[k] : 0;
  Matrix out(rows, dims[i] * dims[j]);
  const std::size_t ok = offset(k), oi = offset(i), oj = offset(j);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t a = 0; a < dims[i]; ++a)
      for (std::size_t b = 0; b < dims[j]; ++b) out(r, a * dims[j] + b) = total.m(ok + r, (oi + a) * d + oj + b);
  return out;
}

ValidationReport check_graded_algebra(const GradedAlg& b) {
  ValidationReport report = check_algebra(b.total);
  const std::size_t d = b.total.dim();
  std::size_t sum = 0;
  for (auto x : b.dims) sum += x;
  report.add("dims-consistent", sum == d && !b.dims.empty());
  if (sum != d || b.dims.empty()) return report;

  std::vector<std::size_t> degree(d);
  for (std::size_t i = 0; i <= b.top(); ++i)
    for (std::size_t a = 0; a < b.dims[i]; ++a) degree[b.offset(i) + a] = i;
  bool homogeneous = true;
  for (std::size_t x = 0; x < d && homogeneous; ++x)
    for (std::size_t y = 0; y < d && homogeneous; ++y)
      for (std::size_t r = 0; r < d; ++r) {
        if (sgn(b.total.m(r, x * d + y)) != 0 && degree[r] != degree[x] + degree[y]) {
          homogeneous = false;
          break;
        }
      }
  report.add("homogeneous", homogeneous);
  bool unit = true, stab = true;
  for (std::size_t r = 0; r < d; ++r) {
    if (degree[r] != 0 && sgn(b.total.u(r, 0)) != 0) unit = false;
  }
  for (const auto& a : b.total.carrier.actions())
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (degree[r] != degree[c] && sgn(a(r, c)) != 0) stab = false;
  report.add("unit-in-degree-0", unit);
  report.add("components-stable", stab);
  return report;
}

std::size_t top_degree(const GradedAlg& b) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < b.dims.size(); ++i)
    if (b.dims[i] > 0) top = i;
  return top;
}

GrResult gr(const FilteredAlg& a) {
  const auto report = check_filtered_algebra(a);
  if (!report.ok()) throw PreconditionViolation("gr: invalid filtered algebra:" + failure_list(report));
  const FilteredObj& f = a.filtration;
  const std::size_t n = f.top(), d = a.algebra.dim();
  const auto pieces = all_pieces(f);

  GrResult out;
  std::vector<std::size_t> dims;
  for (const auto& p : pieces) {
    dims.push_back(p.section.cols());
    out.projections.push_back(p.projection);
    out.sections.push_back(p.section);
  }
  GradedAlg& g = out.graded;
  g.dims = dims;
  std::vector<Matrix> action;
  for (const auto& x : a.algebra.carrier.actions()) action.push_back(block_diagonal_action(x, pieces));
  g.total.carrier = Obj(a.algebra.hopf(), std::move(action));
  g.total.m = Matrix(d, d * d);
  g.total.u = Matrix(d, 1);
  g.total.u.set_block(0, 0, pieces[0].projection * a.algebra.u);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) {
      const Matrix theta = pieces[i + j].projection * a.algebra.m * kron(pieces[i].section, pieces[j].section);
      const std::size_t ok = g.offset(i + j), oi = g.offset(i), oj = g.offset(j);
      for (std::size_t r = 0; r < dims[i + j]; ++r)
        for (std::size_t x = 0; x < dims[i]; ++x)
          for (std::size_t y = 0; y < dims[j]; ++y) g.total.m(ok + r, (oi + x) * d + oj + y) = theta(r, x * dims[j] + y);
    }
  }
  return out;
}

FilteredAlg trivial_filtration(const GradedAlg& b) {
  const std::size_t d = b.total.dim();
  std::vector<Matrix> steps;
  for (std::size_t j = 0; j <= b.top(); ++j) steps.push_back(Matrix::identity(d).block(0, 0, d, b.offset(j + 1)));
  return {b.total, make_filtered(b.total.carrier, std::move(steps))};
}

ValidationReport verify_graded_isomorphism(const GradedAlg& a, const GradedAlg& b, const Matrix& iso) {
  ValidationReport report;
  const bool shapes = a.dims == b.dims && iso.rows() == b.total.dim() && iso.cols() == a.total.dim();
  report.add("dims-equal", shapes);
  if (!shapes) return report;
  bool graded = true;
  for (std::size_t i = 0; i <= a.top(); ++i)
    for (std::size_t j = 0; j <= a.top(); ++j) {
      if (i != j && !iso.block(b.offset(i), a.offset(j), b.dims[i], a.dims[j]).is_zero()) graded = false;
    }
  report.add("degree-preserving", graded);
  report.add("invertible", iso.is_square() && rank(iso) == iso.rows());
  report.add("multiplicative", iso * a.total.m == b.total.m * kron(iso, iso));
  report.add("unital", iso * a.total.u == b.total.u);
  report.add("equivariant", is_equivariant(a.total.carrier, b.total.carrier, iso));
  return report;
}

FilteredIdeal filtered_ideal(const FilteredAlg& a, const WeakIdeal& ideal) {
  return {ideal, induced_filtration(ideal.module.carrier, ideal.phi, a.filtration)};
}

ValidationReport check_filtered_ideal(const FilteredAlg& a, const FilteredIdeal& ideal) {
  const FilteredObj& fa = a.filtration;
  const FilteredObj& fi = ideal.filtration;
  const ModuleObj& mod = ideal.ideal.module;
  ValidationReport report;
  report.merge(check_weak_ideal(ideal.ideal), "ideal/");
  report.merge(check_filtered_obj(fi), "filtration/");
  report.add("phi-filtered", is_filtered_map(fi, fa, ideal.ideal.phi));
  const std::size_t n = std::max(fa.top(), fi.top());
  if (mod.left) {
    bool ok = true;
    for (std::size_t i = 0; i <= n && ok; ++i)
      for (std::size_t j = 0; j <= n && ok; ++j) ok = in_span(fi.step(i + j), *mod.left * kron(fa.step(i), fi.step(j)));
    report.add("left-action-filtered", ok);
  }
  if (mod.right) {
    bool ok = true;
    for (std::size_t i = 0; i <= n && ok; ++i)
      for (std::size_t j = 0; j <= n && ok; ++j) ok = in_span(fi.step(i + j), *mod.right * kron(fi.step(i), fa.step(j)));
    report.add("right-action-filtered", ok);
  }
  return report;
}

QuotientCommutation graded_quotient_commutes(const FilteredAlg& a, const FilteredIdeal& ideal) {
  QuotientCommutation out;
  const GrResult ga = gr(a);
  const std::size_t n = a.filtration.top(), dga = ga.graded.total.dim();

  // gr(I) → gr(A), and its image as a homogeneous subspace of gr(A).
  const auto blocks = gr_mor(ideal.filtration, a.filtration, ideal.ideal.phi);
  Matrix image(dga, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    Matrix lifted(dga, blocks[i].cols());
    lifted.set_block(ga.graded.offset(i), 0, blocks[i]);
    image = hstack(image, lifted);
  }
  image = image.cols() == 0 ? image : column_space(image);

  WeakIdeal gr_ideal;
  try {
    gr_ideal = ideal_from_subspace(ga.graded.total, image, Side::bi);
  } catch (const PreconditionViolation&) {
    out.report.add("gr-image-is-ideal", false);
    return out;
  }
  out.report.add("gr-image-is-ideal", true);
  const QuotientAlgebra q1 = quotient_algebra(ga.graded.total, gr_ideal);
  std::vector<std::size_t> dims(n + 1, 0), degree_of;
  for (std::size_t c = 0; c < q1.section.cols(); ++c) {
    std::size_t coord = 0;
    while (sgn(q1.section(coord, c)) == 0) ++coord;
    std::size_t deg = 0;
    while (ga.graded.offset(deg + 1) <= coord) ++deg;
    ++dims[deg];
    degree_of.push_back(deg);
  }
  out.quotient_of_gr = {q1.algebra, dims};

  const QuotientAlgebra q2 = quotient_algebra(a.algebra, ideal.ideal);
  const FilteredAlg fq{q2.algebra, image_filtration(q2.algebra.carrier, q2.projection, a.filtration)};
  const GrResult g2 = gr(fq);
  out.gr_of_quotient = g2.graded;

  out.iso = Matrix(g2.graded.total.dim(), q1.algebra.dim());
  for (std::size_t c = 0; c < q1.section.cols(); ++c) {
    const std::size_t deg = degree_of[c];
    if (deg > g2.graded.top()) continue;
    const Matrix rep = q1.section.col(c).block(ga.graded.offset(deg), 0, ga.graded.dims[deg], 1);
    const Matrix image_col = g2.projections[deg] * q2.projection * ga.sections[deg] * rep;
    out.iso.set_block(g2.graded.offset(deg), c, image_col);
  }
  out.report.merge(verify_graded_isomorphism(out.quotient_of_gr, out.gr_of_quotient, out.iso));
  return out;
}

}  // namespace frobcat

#include "frobcat/cli/io.hpp"

#include <charconv>

#include "frobcat/error.hpp"
#include "frobcat/repcat/hopf.hpp"

namespace frobcat::io {

namespace {

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& field, const std::string& key) {
  return field.empty() ? key : field + "." + key;
}

const Json& require(const Json& obj, const std::string& key, const std::string& field) {
  if (!obj.is_object()) throw ParseError(field, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(dot(field, key), "missing field");
  return *it;
}

const Json& require_array(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field, "expected an array");
  return j;
}

std::size_t size_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

// Rank-3 array t[x][y][r] = M(r, x·b + y) for an r_count × (a·b) matrix.
Json rank3_to_json(const Matrix& m, std::size_t a, std::size_t b) {
  Json out = Json::array();
  for (std::size_t x = 0; x < a; ++x) {
    Json plane = Json::array();
    for (std::size_t y = 0; y < b; ++y) {
      Json fiber = Json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) fiber.push_back(rational_to_json(m(r, x * b + y)));
      plane.push_back(std::move(fiber));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

Matrix rank3_from_json(const Json& j, std::size_t a, std::size_t b, std::size_t rows, const std::string& field) {
  require_array(j, field);
  if (j.size() != a) throw ParseError(field, "expected " + std::to_string(a) + " entries");
  Matrix m(rows, a * b);
  for (std::size_t x = 0; x < a; ++x) {
    const auto fx = at(field, x);
    require_array(j[x], fx);
    if (j[x].size() != b) throw ParseError(fx, "expected " + std::to_string(b) + " entries");
    for (std::size_t y = 0; y < b; ++y) {
      const auto fy = at(fx, y);
      require_array(j[x][y], fy);
      if (j[x][y].size() != rows) throw ParseError(fy, "expected " + std::to_string(rows) + " entries");
      for (std::size_t r = 0; r < rows; ++r) m(r, x * b + y) = rational_from_json(j[x][y][r], at(fy, r));
    }
  }
  return m;
}

Json canonical_scalars(const Json& j, const std::string& field) {
  if (j.is_array()) {
    Json out = Json::array();
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(canonical_scalars(j[i], at(field, i)));
    return out;
  }
  return rational_to_json(rational_from_json(j, field));
}

Json normalize_section(const Json& j, const std::vector<std::string>& numeric) {
  if (!j.is_object()) return j;
  Json out = j;
  for (const auto& key : numeric)
    if (out.contains(key)) out[key] = canonical_scalars(out[key], key);
  return out;
}

template <class F>
Json normalize_named(const Json& section, F&& f) {
  if (!section.is_object()) return section;
  Json out = Json::object();
  for (auto it = section.begin(); it != section.end(); ++it) out[it.key()] = f(it.value());
  return out;
}

template <class F>
auto wrap(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const MalformedInput& e) {
    throw ParseError(field, e.what());
  } catch (const PreconditionViolation& e) {
    throw ParseError(field, e.what());
  } catch (const CategoryMismatch& e) {
    throw ParseError(field, e.what());
  }
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(field, "expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(field, e.what());
  }
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Matrix matrix_from_json(const Json& j, const std::string& field) {
  require_array(j, field);
  if (j.empty()) return Matrix(0, 0);
  const auto& first = require_array(j[0], at(field, 0));
  Matrix m(j.size(), first.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto fr = at(field, r);
    require_array(j[r], fr);
    if (j[r].size() != first.size()) throw ParseError(fr, "ragged matrix");
    for (std::size_t c = 0; c < first.size(); ++c) m(r, c) = rational_from_json(j[r][c], at(fr, c));
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix vector_from_json(const Json& j, const std::string& field) {
  require_array(j, field);
  Matrix v(j.size(), 1);
  for (std::size_t i = 0; i < j.size(); ++i) v(i, 0) = rational_from_json(j[i], at(field, i));
  return v;
}

Json vector_to_json(const Matrix& v) {
  Json out = Json::array();
  const bool row = v.rows() == 1 && v.cols() != 1;
  const std::size_t n = row ? v.cols() : v.rows();
  for (std::size_t i = 0; i < n; ++i) out.push_back(rational_to_json(row ? v(0, i) : v(i, 0)));
  return out;
}

Matrix product_from_json(const Json& j, std::size_t dim, const std::string& field) {
  return rank3_from_json(j, dim, dim, dim, field);
}

Json product_to_json(const Matrix& m) { return rank3_to_json(m, m.rows(), m.rows()); }

Matrix coproduct_from_json(const Json& j, std::size_t dim, const std::string& field) {
  require_array(j, field);
  if (j.size() != dim) throw ParseError(field, "expected " + std::to_string(dim) + " entries");
  Matrix out(dim * dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const Matrix block = matrix_from_json(j[k], at(field, k));
    if (block.rows() != dim || block.cols() != dim) {
      throw ParseError(at(field, k), "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " array");
    }
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) out(a * dim + b, k) = block(a, b);
  }
  return out;
}

Json coproduct_to_json(const Matrix& comult) {
  const std::size_t dim = comult.cols();
  Json out = Json::array();
  for (std::size_t k = 0; k < dim; ++k) {
    Matrix block(dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) block(a, b) = comult(a * dim + b, k);
    out.push_back(matrix_to_json(block));
  }
  return out;
}

HopfPtr builtin_hopf(const std::string& name) {
  if (name == "vec") return vec_hopf();
  if (name == "super") return super_hopf();
  if (name.rfind("cyclic:", 0) == 0) {
    std::size_t n = 0;
    const auto* begin = name.data() + 7;
    const auto [ptr, ec] = std::from_chars(begin, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size() && n >= 1 && n <= 64) {
      return group_algebra(Group::cyclic(n));
    }
  }
  throw ParseError("hopf", "unknown built-in category '" + name + "'");
}

SpecDocument load(const Json& doc) {
  if (!doc.is_object()) throw ParseError("", "document must be a JSON object");
  SpecDocument out;
  const Json& version = require(doc, "format-version", "");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
    throw ParseError("format-version", std::string("unsupported version, expected \"") + kFormatVersion + "\"");
  }

  const Json& hopf = require(doc, "hopf", "");
  if (hopf.is_string()) {
    out.hopf_name = hopf.get<std::string>();
    out.hopf = builtin_hopf(out.hopf_name);
  } else {
    const std::size_t dim = size_from_json(require(hopf, "dim", "hopf"), "hopf.dim");
    HopfData h;
    h.dim = dim;
    h.mult = product_from_json(require(hopf, "mult", "hopf"), dim, "hopf.mult");
    h.unit = vector_from_json(require(hopf, "unit", "hopf"), "hopf.unit");
    h.comult = coproduct_from_json(require(hopf, "comult", "hopf"), dim, "hopf.comult");
    h.counit = vector_from_json(require(hopf, "counit", "hopf"), "hopf.counit").transpose();
    h.antipode = matrix_from_json(require(hopf, "antipode", "hopf"), "hopf.antipode");
    const Matrix r = matrix_from_json(require(hopf, "rmatrix", "hopf"), "hopf.rmatrix");
    if (r.rows() != dim || r.cols() != dim) throw ParseError("hopf.rmatrix", "expected a dim×dim array");
    h.rmatrix = Matrix(dim * dim, 1);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) h.rmatrix(a * dim + b, 0) = r(a, b);
    out.hopf = wrap("hopf", [&] { return make_hopf(std::move(h)); });
  }

  if (doc.contains("objects")) {
    const Json& objects = doc["objects"];
    if (!objects.is_object()) throw ParseError("objects", "expected an object");
    for (auto it = objects.begin(); it != objects.end(); ++it) {
      const std::string field = "objects." + it.key();
      const Json& action = require_array(require(it.value(), "action", field), field + ".action");
      if (action.size() != out.hopf->dim) {
        throw ParseError(field + ".action", "expected one matrix per basis element of H");
      }
      std::vector<Matrix> mats;
      for (std::size_t h = 0; h < action.size(); ++h) mats.push_back(matrix_from_json(action[h], at(field + ".action", h)));
      out.objects.emplace(it.key(), wrap(field, [&] { return Obj(out.hopf, mats); }));
    }
  }

  if (doc.contains("algebras")) {
    const Json& algebras = doc["algebras"];
    if (!algebras.is_object()) throw ParseError("algebras", "expected an object");
    for (auto it = algebras.begin(); it != algebras.end(); ++it) {
      const std::string field = "algebras." + it.key();
      const Json& carrier = require(it.value(), "carrier", field);
      if (!carrier.is_string() || !out.objects.count(carrier.get<std::string>())) {
        throw ParseError(field + ".carrier", "does not name an object");
      }
      const Obj& obj = out.objects.at(carrier.get<std::string>());
      const std::size_t dim = obj.dim();
      const Matrix m = product_from_json(require(it.value(), "m", field), dim, field + ".m");
      const Matrix u = vector_from_json(require(it.value(), "u", field), field + ".u");
      std::optional<Matrix> comult, counit;
      if (it.value().contains("comult")) comult = coproduct_from_json(it.value()["comult"], dim, field + ".comult");
      if (it.value().contains("counit")) {
        counit = vector_from_json(it.value()["counit"], field + ".counit").transpose();
      }
      if (comult.has_value() != counit.has_value()) throw ParseError(field, "comult and counit come together");
      out.algebras.emplace(it.key(), NamedAlgebra{carrier.get<std::string>(),
                                                  wrap(field, [&] { return make_algebra(obj, m, u, comult, counit); })});
    }
  }

  if (doc.contains("filtrations")) {
    const Json& filtrations = doc["filtrations"];
    if (!filtrations.is_object()) throw ParseError("filtrations", "expected an object");
    for (auto it = filtrations.begin(); it != filtrations.end(); ++it) {
      const std::string field = "filtrations." + it.key();
      const Json& algebra = require(it.value(), "algebra", field);
      if (!algebra.is_string() || !out.algebras.count(algebra.get<std::string>())) {
        throw ParseError(field + ".algebra", "does not name an algebra");
      }
      const std::size_t dim = out.algebras.at(algebra.get<std::string>()).algebra.dim();
      const Json& steps = require_array(require(it.value(), "steps", field), field + ".steps");
      if (steps.empty()) throw ParseError(field + ".steps", "needs at least one step");
      NamedFiltration f{algebra.get<std::string>(), {}};
      for (std::size_t i = 0; i < steps.size(); ++i) {
        Matrix s = matrix_from_json(steps[i], at(field + ".steps", i));
        if (s.rows() == 0 && dim > 0) s = Matrix(dim, 0);
        if (s.rows() != dim) throw ParseError(at(field + ".steps", i), "expected " + std::to_string(dim) + " rows");
        f.steps.push_back(std::move(s));
      }
      out.filtrations.emplace(it.key(), std::move(f));
    }
  }
  return out;
}

SpecDocument load_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", e.what());
  }
  return load(doc);
}

Json serialize(const SpecDocument& doc) {
  Json out = Json::object();
  out["format-version"] = doc.version;
  if (!doc.hopf_name.empty()) {
    out["hopf"] = doc.hopf_name;
  } else {
    const HopfData& h = *doc.hopf;
    Matrix r(h.dim, h.dim);
    for (std::size_t a = 0; a < h.dim; ++a)
      for (std::size_t b = 0; b < h.dim; ++b) r(a, b) = h.rmatrix(a * h.dim + b, 0);
    out["hopf"] = {{"dim", h.dim},
                   {"mult", product_to_json(h.mult)},
                   {"unit", vector_to_json(h.unit)},
                   {"comult", coproduct_to_json(h.comult)},
                   {"counit", vector_to_json(h.counit)},
                   {"antipode", matrix_to_json(h.antipode)},
                   {"rmatrix", matrix_to_json(r)}};
  }
  if (!doc.objects.empty()) {
    Json objects = Json::object();
    for (const auto& [name, obj] : doc.objects) {
      Json action = Json::array();
      for (const auto& a : obj.actions()) action.push_back(matrix_to_json(a));
      objects[name] = {{"action", std::move(action)}};
    }
    out["objects"] = std::move(objects);
  }
  if (!doc.algebras.empty()) {
    Json algebras = Json::object();
    for (const auto& [name, a] : doc.algebras) {
      Json j = {{"carrier", a.carrier}, {"m", product_to_json(a.algebra.m)}, {"u", vector_to_json(a.algebra.u)}};
      if (a.algebra.comult) j["comult"] = coproduct_to_json(*a.algebra.comult);
      if (a.algebra.counit) j["counit"] = vector_to_json(*a.algebra.counit);
      algebras[name] = std::move(j);
    }
    out["algebras"] = std::move(algebras);
  }
  if (!doc.filtrations.empty()) {
    Json filtrations = Json::object();
    for (const auto& [name, f] : doc.filtrations) {
      Json steps = Json::array();
      for (const auto& s : f.steps) steps.push_back(matrix_to_json(s));
      filtrations[name] = {{"algebra", f.algebra}, {"steps", std::move(steps)}};
    }
    out["filtrations"] = std::move(filtrations);
  }
  return out;
}

Json normalize(const Json& doc) {
  Json out = doc;
  if (out.contains("hopf") && out["hopf"].is_object()) {
    out["hopf"] = normalize_section(out["hopf"], {"mult", "unit", "comult", "counit", "antipode", "rmatrix"});
  }
  if (out.contains("objects")) {
    out["objects"] = normalize_named(out["objects"], [](const Json& j) { return normalize_section(j, {"action"}); });
  }
  if (out.contains("algebras")) {
    out["algebras"] = normalize_named(
        out["algebras"], [](const Json& j) { return normalize_section(j, {"m", "u", "comult", "counit"}); });
  }
  if (out.contains("filtrations")) {
    out["filtrations"] = normalize_named(out["filtrations"], [](const Json& j) { return normalize_section(j, {"steps"}); });
  }
  return out;
}

FilteredAlg filtered_algebra(const SpecDocument& doc, const std::string& name) {
  const auto it = doc.filtrations.find(name);
  if (it == doc.filtrations.end()) throw MalformedInput("no filtration named '" + name + "'");
  const AlgObj& a = doc.algebras.at(it->second.algebra).algebra;
  return {a, make_filtered(a.carrier, it->second.steps)};
}

Json certificate_to_json(const FrobeniusCertificate& cert) {
  Json out = {{"verdict", cert.frobenius ? "frobenius" : "not-frobenius"}, {"mode", cert.mode}};
  if (cert.frobenius) {
    out["nu"] = vector_to_json(cert.nu);
    out["gram"] = matrix_to_json(cert.gram);
    out["q"] = vector_to_json(cert.q);
    out["comult"] = coproduct_to_json(cert.comult);
    out["counit"] = vector_to_json(cert.counit);
    out["refutation"] = nullptr;
  } else {
    for (const char* key : {"nu", "gram", "q", "comult", "counit"}) out[key] = nullptr;
    Json r = {{"note", cert.refutation.note}};
    if (cert.refutation.determinant) {
      r["determinant"] = cert.refutation.determinant->to_string();
    } else {
      r["samples"] = cert.refutation.samples;
      r["failure-bound"] = rational_to_json(cert.refutation.failure_bound);
    }
    out["refutation"] = std::move(r);
  }
  return out;
}

Json graded_to_json(const GradedAlg& b) {
  Json products = Json::array();
  for (std::size_t i = 0; i <= b.top(); ++i)
    for (std::size_t j = 0; i + j <= b.top(); ++j) {
      products.push_back({{"degrees", {i, j}}, {"m", rank3_to_json(b.mult_block(i, j), b.dims[i], b.dims[j])}});
    }
  return {{"components", b.dims},
          {"m", product_to_json(b.total.m)},
          {"u", vector_to_json(b.total.u)},
          {"products", std::move(products)}};
}

Json graded_report_to_json(const GradedFrobeniusReport& r) {
  return {{"top-degree", r.top},
          {"top-dim", r.top_dim},
          {"block-ranks", r.block_ranks},
          {"epsilon", vector_to_json(r.epsilon)},
          {"checks", report_to_json(r.checks)}};
}

Json report_to_json(const ValidationReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks()) {
    Json j = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace frobcat::io

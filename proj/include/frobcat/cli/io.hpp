#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobcat/algebra/algebra.hpp"
#include "frobcat/filtration/filtration.hpp"
#include "frobcat/frobenius/frobenius.hpp"

namespace frobcat::io {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

struct NamedAlgebra {
  std::string carrier;
  AlgObj algebra;
};

struct NamedFiltration {
  std::string algebra;
  std::vector<Matrix> steps;  // as written, not normalized
};

/// A category/algebra/filtration document. The Hopf algebra is either a
/// built-in name ("vec", "super", "cyclic:n") or explicit
/// structure constants.
struct SpecDocument {
  std::string version = kFormatVersion;
  std::string hopf_name;  // empty when explicit
  HopfPtr hopf;
  std::map<std::string, Obj> objects;
  std::map<std::string, NamedAlgebra> algebras;
  std::map<std::string, NamedFiltration> filtrations;
};

/// Scalars are "p/q" strings; plain JSON integers are accepted too.
Rational rational_from_json(const Json& j, const std::string& field);
Json rational_to_json(const Rational& r);

/// Row-major nested arrays.
Matrix matrix_from_json(const Json& j, const std::string& field);
Json matrix_to_json(const Matrix& m);
/// A flat array read as a column (or written from a row or a column).
Matrix vector_from_json(const Json& j, const std::string& field);
Json vector_to_json(const Matrix& v);

/// m[i][j][k] = coefficient of e_k in e_i·e_j.
Matrix product_from_json(const Json& j, std::size_t dim, const std::string& field);
Json product_to_json(const Matrix& m);
/// d[k][i][j] = coefficient of e_i⊗e_j in Δ(e_k).
Matrix coproduct_from_json(const Json& j, std::size_t dim, const std::string& field);
Json coproduct_to_json(const Matrix& comult);

HopfPtr builtin_hopf(const std::string& name);

/// Throws ParseError naming the offending field.
SpecDocument load(const Json& doc);
SpecDocument load_text(const std::string& text);
Json serialize(const SpecDocument& doc);

/// Canonical form of a valid document: scalars rewritten as reduced "p/q"
/// strings and integers as strings.
Json normalize(const Json& doc);

/// The named filtration on its algebra; throws MalformedInput when the steps
/// are not nested.
FilteredAlg filtered_algebra(const SpecDocument& doc, const std::string& name);

Json certificate_to_json(const FrobeniusCertificate& cert);
Json graded_to_json(const GradedAlg& b);
Json graded_report_to_json(const GradedFrobeniusReport& r);
Json report_to_json(const ValidationReport& r);

}  // namespace frobcat::io

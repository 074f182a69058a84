#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "frobcat/exactla/matrix.hpp"

namespace frobcat {

/// Sparse multivariate polynomial over the rationals in variables t1..td.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  /// Adds c·t^exponents; drops the term if the coefficient cancels.
  void add_term(const Exponents& exponents, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form such as "-t1^2 + 1/2*t1*t2"; "0" for zero.
  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// Default largest matrix size accepted by symbolic_det.
inline constexpr std::size_t kDefaultSymbolicDetMaxSize = 6;

/// det(Σ_k t_k·G_k) as a polynomial in t_1..t_d, by memoized expansion along
/// rows. Throws MalformedInput on ragged shapes and CapacityExceeded when the
/// matrices are larger than `max_size`.
MultiPoly symbolic_det(std::span<const Matrix> pencil,
                       std::size_t max_size = kDefaultSymbolicDetMaxSize);

}  // namespace frobcat

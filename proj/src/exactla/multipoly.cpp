#include "frobcat/exactla/multipoly.hpp"

#include <sstream>
#include <unordered_map>

#include "frobcat/error.hpp"

namespace frobcat {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e.at(index) = 1;
  p.add_term(e, 1);
  return p;
}

unsigned MultiPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

void MultiPoly::add_term(const Exponents& exponents, const Rational& c) {
  if (exponents.size() != nvars_) throw MalformedInput("exponent vector length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw MalformedInput("evaluation point has wrong arity");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < nvars_; ++k) {
      for (unsigned p = 0; p < e[k]; ++p) term *= point[k];
    }
    total += term;
  }
  return total;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw MalformedInput("polynomial arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw MalformedInput("polynomial arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw MalformedInput("polynomial arity mismatch");
  MultiPoly out(a.nvars_);
  MultiPoly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& a) {
  MultiPoly out(a.nvars_);
  for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent vectors first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool is_constant = true;
    for (auto x : e) is_constant = is_constant && x == 0;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (is_constant || mag != 1) {
      os << frobcat::to_string(mag);
      wrote = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (wrote) os << '*';
      os << 't' << (k + 1);
      if (e[k] > 1) os << '^' << e[k];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly symbolic_det(std::span<const Matrix> pencil, std::size_t max_size) {
  if (pencil.empty()) throw MalformedInput("symbolic_det: empty pencil");
  const std::size_t n = pencil[0].rows();
  for (const auto& g : pencil) {
    if (g.rows() != n || g.cols() != n) throw MalformedInput("symbolic_det: ragged pencil");
  }
  if (n > max_size) {
    throw CapacityExceeded("symbolic_det: size " + std::to_string(n) + " exceeds capacity " +
                           std::to_string(max_size));
  }
  const std::size_t d = pencil.size();
  if (n == 0) return MultiPoly::constant(d, 1);

  std::vector<MultiPoly> entry(n * n, MultiPoly(d));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < d; ++k) {
        if (sgn(pencil[k](r, c)) == 0) continue;
        MultiPoly::Exponents e(d, 0);
        e[k] = 1;
        entry[r * n + c].add_term(e, pencil[k](r, c));
      }
    }
  }

  // minor[mask] = determinant of the rows n-|mask|.. against the columns in mask.
  std::unordered_map<unsigned, MultiPoly> minor;
  minor.emplace(0u, MultiPoly::constant(d, 1));
  for (unsigned size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<unsigned>(__builtin_popcount(mask)) != size) continue;
      MultiPoly acc(d);
      int position = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(mask & (1u << c))) continue;
        const MultiPoly& a = entry[row * n + c];
        if (!a.is_zero()) {
          const MultiPoly& rest = minor.at(mask & ~(1u << c));
          if (!rest.is_zero()) {
            MultiPoly term = a * rest;
            if (position % 2) acc -= term; else acc += term;
          }
        }
        ++position;
      }
      minor.emplace(mask, std::move(acc));
    }
  }
  return minor.at((1u << n) - 1);
}

}  // namespace frobcat

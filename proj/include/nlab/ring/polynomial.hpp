#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nlab/ring/monomial.hpp"
#include "nlab/ring/rational.hpp"

namespace nlab {

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in descending graded-lex order and never hold a zero
/// coefficient, so structural equality is mathematical equality.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;
  /// Sorted by strictly descending monomial.
  using Terms = std::vector<Term>;

  explicit Polynomial(std::size_t dimension) : dimension_(dimension) {}

  static Polynomial constant(std::size_t dimension, const Rational& value);
  static Polynomial variable(std::size_t dimension, std::size_t index);
  static Polynomial term(const Monomial& monomial, const Rational& coefficient);

  std::size_t dimension() const { return dimension_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  Rational coefficient(const Monomial& monomial) const;
  std::optional<Rational> constant_value() const;

  /// Adds c * m in place, pruning the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);
  /// Appends a term below every existing one; the caller guarantees order.
  void push_lowest(Monomial m, Rational c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned exponent) const;

 private:
  std::size_t dimension_;
  Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Partial derivative with respect to coordinate `index`.
Polynomial partial(const Polynomial& p, std::size_t index);

/// Exact quotient p / q, or std::nullopt when q does not divide p.
/// Throws DivisionByZero when q is zero.
std::optional<Polynomial> try_exact_div(const Polynomial& p, const Polynomial& q);

/// Exact quotient p / q; throws NotDivisible when q does not divide p.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);

/// Canonical text, e.g. "2/3*x^2*y - x + 1". Terms in descending graded-lex
/// order; `names` supplies one identifier per variable.
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);

}  // namespace nlab

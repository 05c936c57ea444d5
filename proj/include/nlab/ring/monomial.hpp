#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace nlab {

/// Exponent vector x1^e1 * ... * xn^en over a fixed number of variables.
///
/// Monomials are totally ordered graded-lexicographically: by total degree
/// first, then lexicographically on the exponent vector (x1 > x2 > ...).
class Monomial {
 public:
  using Exponent = std::uint32_t;
  using Exponents = boost::container::small_vector<Exponent, 8>;

  explicit Monomial(std::size_t dimension) : exponents_(dimension, 0) {}
  explicit Monomial(Exponents exponents);
  explicit Monomial(const std::vector<Exponent>& exponents)
      : Monomial(Exponents(exponents.begin(), exponents.end())) {}

  static Monomial variable(std::size_t dimension, std::size_t index);

  std::size_t dimension() const { return exponents_.size(); }
  const Exponents& exponents() const { return exponents_; }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  unsigned total_degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / *this, when divides(other).
  std::optional<Monomial> quotient_of(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exponents_ == b.exponents_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  Exponents exponents_;
  unsigned degree_ = 0;
};

/// Every monomial of total degree <= max_degree, ascending in graded-lex order.
std::vector<Monomial> monomials_up_to(std::size_t dimension, unsigned max_degree);

}  // namespace nlab

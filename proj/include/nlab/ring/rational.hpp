#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nlab {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are held inline;
/// anything larger moves to a GMP rational. The inline form is used whenever
/// it fits, so representations are canonical.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : num_(value) {}  // NOLINT: implicit from integer literals
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  /// Parses "a" or "a/b" with an optional leading sign.
  static Rational parse(std::string_view text);

  mpz_class numerator() const;
  mpz_class denominator() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "a" for integers, "a/b" otherwise.
  std::string to_string() const;

 private:
  mpq_class to_mpq() const;
  void assign(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::optional<mpq_class> big_;
};

}  // namespace nlab

#include "nlab/ring/rational.hpp"

#include <cctype>
#include <limits>

#include "nlab/errors.hpp"

namespace nlab {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

bool is_signed_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_signed_integer(s)) throw Error("invalid integer literal '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

u128 magnitude(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  assign(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), 1);
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz(num_); }

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : to_mpz(den_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

void Rational::assign(mpq_class value) {
  if (mpz_fits_slong_p(value.get_num_mpz_t()) && mpz_fits_slong_p(value.get_den_mpz_t())) {
    num_ = mpz_get_si(value.get_num_mpz_t());
    den_ = mpz_get_si(value.get_den_mpz_t());
    big_.reset();
  } else {
    big_ = std::move(value);
  }
}

Rational Rational::operator-() const {
  Rational r;
  if (big_ || num_ == std::numeric_limits<std::int64_t>::min()) {
    r.assign(-to_mpq());
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      std::int64_t sum;
      if (!__builtin_add_overflow(num_, other.num_, &sum)) {
        num_ = sum;
        return *this;
      }
    } else {
      i128 n = static_cast<i128>(num_) * other.den_ + static_cast<i128>(other.num_) * den_;
      i128 d = static_cast<i128>(den_) * other.den_;
      if (n == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
      }
      u128 g = gcd128(magnitude(n), static_cast<u128>(d));
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
      if (fits64(n) && fits64(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        return *this;
      }
    }
  }
  assign(to_mpq() + other.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
  if (!big_ && !other.big_) {
    if (num_ == 0 || other.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && other.den_ == 1) {
      std::int64_t prod;
      if (!__builtin_mul_overflow(num_, other.num_, &prod)) {
        num_ = prod;
        return *this;
      }
    } else {
      i128 n = static_cast<i128>(num_) * other.num_;
      i128 d = static_cast<i128>(den_) * other.den_;
      u128 g = gcd128(magnitude(n), static_cast<u128>(d));
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
      if (fits64(n) && fits64(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        return *this;
      }
    }
  }
  assign(to_mpq() * other.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DivisionByZero("rational division by zero");
  assign(to_mpq() / other.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_.has_value() != b.big_.has_value()) return false;
  if (a.big_) return *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c;
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    c = (l > r) - (l < r);
  } else {
    c = cmp(a.to_mpq(), b.to_mpq());
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Rational::to_string() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace nlab

#include "nlab/ring/polynomial.hpp"

#include <algorithm>

#include "nlab/errors.hpp"

namespace nlab {

namespace {

void require_same_dimension(const Polynomial& p, const Polynomial& q) {
  if (p.dimension() != q.dimension()) {
    throw DimensionMismatch("polynomial dimension mismatch: " + std::to_string(p.dimension()) +
                            " vs " + std::to_string(q.dimension()));
  }
}

}  // namespace

Polynomial Polynomial::constant(std::size_t dimension, const Rational& value) {
  Polynomial p(dimension);
  p.add_term(Monomial(dimension), value);
  return p;
}

Polynomial Polynomial::variable(std::size_t dimension, std::size_t index) {
  Polynomial p(dimension);
  p.add_term(Monomial::variable(dimension, index), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& monomial, const Rational& coefficient) {
  Polynomial p(monomial.dimension());
  p.add_term(monomial, coefficient);
  return p;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  // Descending graded-lex: the first term has maximal degree.
  return static_cast<int>(terms_.front().first.total_degree());
}

namespace {

auto find_slot(Polynomial::Terms& terms, const Monomial& m) {
  return std::lower_bound(terms.begin(), terms.end(), m,
                          [](const Polynomial::Term& t, const Monomial& key) { return t.first > key; });
}

Polynomial::Terms::const_iterator find_slot(const Polynomial::Terms& terms, const Monomial& m) {
  return std::lower_bound(terms.begin(), terms.end(), m,
                          [](const Polynomial::Term& t, const Monomial& key) { return t.first > key; });
}

/// Merge of two descending term lists, b scaled by `sign`.
Polynomial::Terms merge(const Polynomial::Terms& a, const Polynomial::Terms& b, bool negate_b) {
  Polynomial::Terms out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first > j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first > i->first) {
      out.emplace_back(j->first, negate_b ? -j->second : j->second);
      ++j;
    } else {
      Rational c = negate_b ? i->second - j->second : i->second + j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Rational Polynomial::coefficient(const Monomial& monomial) const {
  auto it = find_slot(terms_, monomial);
  return (it == terms_.end() || !(it->first == monomial)) ? Rational(0) : it->second;
}

std::optional<Rational> Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().first.is_one()) return terms_.front().second;
  return std::nullopt;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.dimension() != dimension_) throw DimensionMismatch("monomial dimension mismatch");
  if (c.is_zero()) return;
  auto it = find_slot(terms_, m);
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.emplace(it, m, c);
  }
}

void Polynomial::push_lowest(Monomial m, Rational c) {
  if (c.is_zero()) return;
  terms_.emplace_back(std::move(m), std::move(c));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_dimension(*this, other);
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_dimension(*this, other);
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_dimension(a, b);
  Polynomial r(a.dimension());
  if (a.terms_.empty() || b.terms_.empty()) return r;
  Polynomial::Terms products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
  }
  std::sort(products.begin(), products.end(),
            [](const Polynomial::Term& x, const Polynomial::Term& y) { return x.first > y.first; });
  for (auto& t : products) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
    } else {
      if (!r.terms_.empty() && r.terms_.back().second.is_zero()) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().second.is_zero()) r.terms_.pop_back();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(dimension_, Rational(1));
  Polynomial base(*this);
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial partial(const Polynomial& p, std::size_t index) {
  if (index >= p.dimension()) {
    throw IndexOutOfRange("partial derivative index " + std::to_string(index) +
                          " out of range for dimension " + std::to_string(p.dimension()));
  }
  Polynomial r(p.dimension());
  for (const auto& [m, c] : p.terms()) {
    auto e = m[index];
    if (e == 0) continue;
    Monomial::Exponents exps(m.exponents());
    exps[index] -= 1;
    // Lowering one exponent in every surviving term preserves graded-lex order.
    r.push_lowest(Monomial(std::move(exps)), c * Rational(static_cast<long>(e)));
  }
  return r;
}

std::optional<Polynomial> try_exact_div(const Polynomial& p, const Polynomial& q) {
  require_same_dimension(p, q);
  if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
  const auto& [lead_m, lead_c] = q.terms().front();
  Polynomial remainder(p);
  Polynomial quotient(p.dimension());
  // With a monomial order, q | p forces LT(q) | LT(remainder) at every step.
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.terms().front();
    auto qm = lead_m.quotient_of(rm);
    if (!qm) return std::nullopt;
    Polynomial step = Polynomial::term(*qm, rc / lead_c);
    quotient += step;
    remainder -= step * q;
  }
  return quotient;
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  auto r = try_exact_div(p, q);
  if (!r) throw NotDivisible("polynomial is not an exact multiple of the divisor");
  return *std::move(r);
}

namespace {

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (names.size() != p.dimension()) throw DimensionMismatch("name list does not match dimension");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    Rational magnitude = c.sign() < 0 ? -c : c;
    if (m.is_one()) {
      out += magnitude.to_string();
    } else {
      if (!magnitude.is_one()) out += magnitude.to_string() + '*';
      out += monomial_text(m, names);
    }
  }
  return out;
}

}  // namespace nlab

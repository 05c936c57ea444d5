#include "nlab/ring/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "nlab/errors.hpp"

namespace nlab {

Monomial::Monomial(Exponents exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

Monomial Monomial::variable(std::size_t dimension, std::size_t index) {
  if (index >= dimension) throw IndexOutOfRange("variable index out of range");
  Exponents e(dimension, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (dimension() != other.dimension()) throw DimensionMismatch("monomial dimension mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < r.exponents_.size(); ++i) r.exponents_[i] += other.exponents_[i];
  r.degree_ += other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (dimension() != other.dimension()) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::quotient_of(const Monomial& other) const {
  if (!divides(other)) return std::nullopt;
  Monomial r(other);
  for (std::size_t i = 0; i < r.exponents_.size(); ++i) r.exponents_[i] -= exponents_[i];
  r.degree_ -= degree_;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) {
    if (a.exponents_[i] != b.exponents_[i]) return a.exponents_[i] <=> b.exponents_[i];
  }
  return a.exponents_.size() <=> b.exponents_.size();
}

namespace {

void enumerate_degree(std::size_t pos, unsigned remaining, std::vector<Monomial::Exponent>& e,
                      std::vector<Monomial>& out) {
  if (pos + 1 == e.size()) {
    e[pos] = remaining;
    out.emplace_back(e);
    return;
  }
  for (unsigned k = 0; k <= remaining; ++k) {
    e[pos] = k;
    enumerate_degree(pos + 1, remaining - k, e, out);
  }
  e[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t dimension, unsigned max_degree) {
  std::vector<Monomial> out;
  if (dimension == 0) {
    out.emplace_back(0);
    return out;
  }
  std::vector<Monomial::Exponent> e(dimension, 0);
  for (unsigned d = 0; d <= max_degree; ++d) {
    std::vector<Monomial> layer;
    enumerate_degree(0, d, e, layer);
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace nlab

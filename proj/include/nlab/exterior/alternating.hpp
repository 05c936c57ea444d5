#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nlab/errors.hpp"
#include "nlab/exterior/chart.hpp"
#include "nlab/exterior/multi_index.hpp"
#include "nlab/ring/polynomial.hpp"

namespace nlab {

struct FormKind {};
struct VectorKind {};

/// Alternating tensor of fixed degree over a chart, with polynomial
/// coefficients. Components live only on strictly increasing multi-indices
/// and zero components are never stored.
///
/// Kind distinguishes differential forms (covariant) from multivector fields
/// (contravariant) at the type level.
template <class Kind>
class Alternating {
 public:
  using Components = std::map<MultiIndex, Polynomial>;

  Alternating(Chart chart, std::size_t degree) : chart_(std::move(chart)), degree_(degree) {}

  static Alternating zero(const Chart& chart, std::size_t degree) { return {chart, degree}; }

  /// Degree-0 element wrapping a function.
  static Alternating scalar(const Chart& chart, const Polynomial& f) {
    Alternating a(chart, 0);
    a.add(MultiIndex{}, f);
    return a;
  }

  static Alternating basis(const Chart& chart, const MultiIndex& index) {
    Alternating a(chart, index.size());
    a.add(index, chart.constant(Rational(1)));
    return a;
  }

  const Chart& chart() const { return chart_; }
  std::size_t degree() const { return degree_; }
  const Components& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }

  Polynomial component(const MultiIndex& index) const {
    auto it = components_.find(index);
    return it == components_.end() ? chart_.zero() : it->second;
  }

  /// The function wrapped by a degree-0 element.
  Polynomial as_scalar() const {
    if (degree_ != 0) throw DegreeMismatch("not a degree-0 element");
    return component(MultiIndex{});
  }

  /// Adds coeff * basis(index) for a sorted index.
  void add(const MultiIndex& index, const Polynomial& coeff) {
    if (index.size() != degree_) {
      throw DegreeMismatch("component of length " + std::to_string(index.size()) +
                           " in a degree-" + std::to_string(degree_) + " element");
    }
    if (!index.empty() && index[index.size() - 1] >= chart_.dimension()) {
      throw IndexOutOfRange("basis index beyond chart dimension");
    }
    if (coeff.dimension() != chart_.dimension()) throw DimensionMismatch("coefficient dimension");
    if (coeff.is_zero()) return;
    auto [it, inserted] = components_.try_emplace(index, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) components_.erase(it);
    }
  }

  /// Adds coeff * e_{i1} ^ ... ^ e_{ik} for an arbitrary index sequence,
  /// normalizing by permutation parity.
  void add_unsorted(std::vector<std::size_t> indices, const Polynomial& coeff) {
    if (indices.size() != degree_) throw DegreeMismatch("index sequence length != degree");
    auto normalized = MultiIndex::normalize(std::move(indices));
    if (!normalized) return;
    auto& [sign, index] = *normalized;
    add(index, sign < 0 ? -coeff : coeff);
  }

  Alternating operator-() const {
    Alternating r(*this);
    for (auto& [i, c] : r.components_) c = -c;
    return r;
  }

  Alternating& operator+=(const Alternating& other) {
    check_compatible(other);
    for (const auto& [i, c] : other.components_) add(i, c);
    return *this;
  }

  Alternating& operator-=(const Alternating& other) {
    check_compatible(other);
    for (const auto& [i, c] : other.components_) add(i, -c);
    return *this;
  }

  friend Alternating operator+(Alternating a, const Alternating& b) { return a += b; }
  friend Alternating operator-(Alternating a, const Alternating& b) { return a -= b; }

  friend Alternating operator*(const Polynomial& f, const Alternating& a) {
    Alternating r(a.chart_, a.degree_);
    if (f.is_zero()) return r;
    for (const auto& [i, c] : a.components_) r.add(i, f * c);
    return r;
  }

  friend Alternating operator*(const Rational& s, const Alternating& a) {
    return Polynomial::constant(a.chart_.dimension(), s) * a;
  }

  friend bool operator==(const Alternating& a, const Alternating& b) {
    return a.degree_ == b.degree_ && a.chart_ == b.chart_ && a.components_ == b.components_;
  }

 private:
  void check_compatible(const Alternating& other) const {
    require_same_chart(chart_, other.chart_);
    if (degree_ != other.degree_) {
      throw DegreeMismatch("adding elements of degree " + std::to_string(degree_) + " and " +
                           std::to_string(other.degree_));
    }
  }

  Chart chart_;
  std::size_t degree_;
  Components components_;
};

using DifferentialForm = Alternating<FormKind>;
using MultivectorField = Alternating<VectorKind>;

}  // namespace nlab

#include "nlab/exterior/operations.hpp"

namespace nlab {

namespace {

template <class Kind>
Alternating<Kind> wedge_impl(const Alternating<Kind>& a, const Alternating<Kind>& b) {
  require_same_chart(a.chart(), b.chart());
  Alternating<Kind> out(a.chart(), a.degree() + b.degree());
  for (const auto& [i, ci] : a.components()) {
    for (const auto& [j, cj] : b.components()) {
      std::vector<std::size_t> joined(i.begin(), i.end());
      joined.insert(joined.end(), j.begin(), j.end());
      out.add_unsorted(std::move(joined), ci * cj);
    }
  }
  return out;
}

void require_degree_one(const MultivectorField& x) {
  if (x.degree() != 1) throw DegreeMismatch("expected a vector field (degree 1)");
}

}  // namespace

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  return wedge_impl(a, b);
}

MultivectorField wedge(const MultivectorField& a, const MultivectorField& b) {
  return wedge_impl(a, b);
}

Polynomial pairing(const MultivectorField& p, const DifferentialForm& w) {
  require_same_chart(p.chart(), w.chart());
  if (p.degree() != w.degree()) throw DegreeMismatch("pairing of unequal degrees");
  Polynomial sum = p.chart().zero();
  for (const auto& [i, c] : p.components()) {
    auto it = w.components().find(i);
    if (it != w.components().end()) sum += c * it->second;
  }
  return sum;
}

MultivectorField contract(const DifferentialForm& beta, const MultivectorField& p) {
  require_same_chart(beta.chart(), p.chart());
  if (beta.degree() > p.degree()) {
    throw DegreeMismatch("cannot contract a degree-" + std::to_string(beta.degree()) +
                         " form into a degree-" + std::to_string(p.degree()) + " multivector");
  }
  MultivectorField out(p.chart(), p.degree() - beta.degree());
  for (const auto& [i, bi] : beta.components()) {
    for (const auto& [k, pk] : p.components()) {
      // <P, dx^I ^ dx^J> is nonzero only when I and J partition K.
      bool subset = true;
      for (auto idx : i) {
        if (!k.contains(idx)) {
          subset = false;
          break;
        }
      }
      if (!subset) continue;
      std::vector<std::size_t> rest;
      for (auto idx : k) {
        if (!i.contains(idx)) rest.push_back(idx);
      }
      std::vector<std::size_t> order(i.begin(), i.end());
      order.insert(order.end(), rest.begin(), rest.end());
      int sign = permutation_sign(order);
      Polynomial coeff = bi * pk;
      out.add(MultiIndex(std::move(rest)), sign < 0 ? -coeff : coeff);
    }
  }
  return out;
}

DifferentialForm interior_product(const MultivectorField& x, const DifferentialForm& w) {
  require_same_chart(x.chart(), w.chart());
  require_degree_one(x);
  if (w.degree() == 0) throw DegreeMismatch("interior product of a 0-form");
  DifferentialForm out(w.chart(), w.degree() - 1);
  for (const auto& [i, c] : w.components()) {
    for (std::size_t pos = 0; pos < i.size(); ++pos) {
      Polynomial xi = vector_component(x, i[pos]);
      if (xi.is_zero()) continue;
      Polynomial coeff = xi * c;
      out.add(i.without_position(pos), pos % 2 == 0 ? coeff : -coeff);
    }
  }
  return out;
}

MultivectorField vector_field(const Chart& chart, const std::vector<Polynomial>& components) {
  if (components.size() != chart.dimension()) {
    throw DimensionMismatch("vector field needs one component per coordinate");
  }
  MultivectorField x(chart, 1);
  for (std::size_t i = 0; i < components.size(); ++i) x.add(MultiIndex({i}), components[i]);
  return x;
}

Polynomial vector_component(const MultivectorField& x, std::size_t index) {
  require_degree_one(x);
  return x.component(MultiIndex({index}));
}

Polynomial apply(const MultivectorField& x, const Polynomial& f) {
  require_degree_one(x);
  if (f.dimension() != x.chart().dimension()) throw DimensionMismatch("function dimension");
  Polynomial out = x.chart().zero();
  for (const auto& [i, c] : x.components()) out += c * partial(f, i[0]);
  return out;
}

DifferentialForm wedge_of_differentials(const Chart& chart, const std::vector<Polynomial>& fs) {
  DifferentialForm out = DifferentialForm::scalar(chart, chart.constant(Rational(1)));
  for (const auto& f : fs) {
    DifferentialForm df(chart, 1);
    for (std::size_t i = 0; i < chart.dimension(); ++i) df.add(MultiIndex({i}), partial(f, i));
    out = wedge(out, df);
  }
  return out;
}

}  // namespace nlab

namespace nlab {

namespace {

template <class Kind>
std::string render(const Alternating<Kind>& a, const char* basis_prefix) {
  const auto& names = a.chart().names();
  auto basis = [&](const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k > 0) s += '^';
      s += basis_prefix + std::to_string(idx[k] + 1);
    }
    return s;
  };
  if (a.is_zero()) {
    if (a.degree() == 0) return "(0)";
    std::vector<std::size_t> first(a.degree());
    for (std::size_t k = 0; k < first.size(); ++k) first[k] = k;
    return "(0)*" + basis(first);
  }
  std::string out;
  for (const auto& [index, coeff] : a.components()) {
    if (!out.empty()) out += " + ";
    out += '(' + to_string(coeff, names) + ')';
    if (!index.empty()) out += '*' + basis(index.indices());
  }
  return out;
}

}  // namespace

std::string to_string(const DifferentialForm& w) { return render(w, "dx"); }

std::string to_string(const MultivectorField& p) { return render(p, "e"); }

}  // namespace nlab

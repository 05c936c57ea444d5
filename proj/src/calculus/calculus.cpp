#include "nlab/calculus/calculus.hpp"

namespace nlab {

namespace {

void require_vector_field(const MultivectorField& x) {
  if (x.degree() != 1) throw DegreeMismatch("expected a vector field (degree 1)");
}

}  // namespace

DifferentialForm exterior_derivative(const DifferentialForm& w) {
  const std::size_t n = w.chart().dimension();
  if (w.degree() >= n) {
    throw DegreeOverflow("exterior derivative of a degree-" + std::to_string(w.degree()) +
                         " form on a " + std::to_string(n) + "-dimensional chart");
  }
  DifferentialForm out(w.chart(), w.degree() + 1);
  for (const auto& [index, coeff] : w.components()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (index.contains(i)) continue;
      Polynomial di = partial(coeff, i);
      if (di.is_zero()) continue;
      std::vector<std::size_t> seq{i};
      seq.insert(seq.end(), index.begin(), index.end());
      out.add_unsorted(std::move(seq), di);
    }
  }
  return out;
}

DifferentialForm lie_derivative(const MultivectorField& x, const DifferentialForm& w) {
  require_same_chart(x.chart(), w.chart());
  require_vector_field(x);
  if (w.degree() == 0) return DifferentialForm::scalar(w.chart(), apply(x, w.as_scalar()));
  DifferentialForm out = exterior_derivative(interior_product(x, w));
  // i_X(dw) vanishes identically on top-degree forms.
  if (w.degree() < w.chart().dimension()) out += interior_product(x, exterior_derivative(w));
  return out;
}

MultivectorField commutator(const MultivectorField& x, const MultivectorField& y) {
  require_same_chart(x.chart(), y.chart());
  require_vector_field(x);
  require_vector_field(y);
  const std::size_t n = x.chart().dimension();
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    comps.push_back(apply(x, vector_component(y, j)) - apply(y, vector_component(x, j)));
  }
  return vector_field(x.chart(), comps);
}

MultivectorField lie_derivative(const MultivectorField& x, const MultivectorField& p) {
  require_same_chart(x.chart(), p.chart());
  require_vector_field(x);
  const std::size_t n = x.chart().dimension();
  MultivectorField out(p.chart(), p.degree());
  for (const auto& [index, coeff] : p.components()) {
    out.add(index, apply(x, coeff));
    // [X, d_j] = -sum_i (d_j X^i) d_i, substituted in each slot.
    for (std::size_t slot = 0; slot < index.size(); ++slot) {
      const std::size_t j = index[slot];
      for (std::size_t i = 0; i < n; ++i) {
        Polynomial c = partial(vector_component(x, i), j);
        if (c.is_zero()) continue;
        std::vector<std::size_t> seq(index.begin(), index.end());
        seq[slot] = i;
        out.add_unsorted(std::move(seq), -(coeff * c));
      }
    }
  }
  return out;
}

}  // namespace nlab

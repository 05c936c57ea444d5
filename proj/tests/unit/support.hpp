#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "nlab/calculus/nambu.hpp"
#include "nlab/exterior/operations.hpp"
#include "nlab/ring/random.hpp"

namespace nlab::testing {

inline std::string data_path(const std::string& name) { return std::string(NLAB_TEST_DATA) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Polynomial random_poly(Rng& rng, std::size_t n, unsigned deg = 2) {
  return sample_polynomial(rng, n, deg, 3);
}

template <class Kind>
Alternating<Kind> random_alternating(Rng& rng, const Chart& chart, std::size_t k, unsigned deg = 2) {
  Alternating<Kind> a(chart, k);
  for (const auto& idx : multi_indices(chart.dimension(), k)) {
    // Roughly half the components stay empty so sparsity paths get exercised.
    if (rng.uniform(0, 1) == 0) continue;
    a.add(idx, random_poly(rng, chart.dimension(), deg));
  }
  return a;
}

inline DifferentialForm random_form(Rng& rng, const Chart& chart, std::size_t k, unsigned deg = 2) {
  return random_alternating<FormKind>(rng, chart, k, deg);
}

inline MultivectorField random_multivector(Rng& rng, const Chart& chart, std::size_t k,
                                           unsigned deg = 2) {
  return random_alternating<VectorKind>(rng, chart, k, deg);
}

inline NambuStructure canonical(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return NambuStructure(n, MultivectorField::basis(Chart::standard(n), MultiIndex(all)));
}

}  // namespace nlab::testing

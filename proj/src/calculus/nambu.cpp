#include "nlab/calculus/nambu.hpp"

#include "nlab/ring/random.hpp"

namespace nlab {

NambuStructure::NambuStructure(std::size_t order, MultivectorField lambda)
    : order_(order), lambda_(std::move(lambda)) {
  const std::size_t n = lambda_.chart().dimension();
  if (order_ < 2 || order_ > n) {
    throw DegreeMismatch("Nambu order " + std::to_string(order_) + " outside [2, " +
                         std::to_string(n) + "]");
  }
  if (lambda_.degree() != order_) {
    throw DegreeMismatch("Nambu tensor has degree " + std::to_string(lambda_.degree()) +
                         " but order " + std::to_string(order_));
  }
}

namespace {

void require_arity(const std::vector<Polynomial>& fs, std::size_t expected, const char* what) {
  if (fs.size() != expected) {
    throw ArityMismatch(std::string(what) + " expects " + std::to_string(expected) +
                        " functions, got " + std::to_string(fs.size()));
  }
}

std::vector<Polynomial> generator_family(const Chart& chart) {
  const std::size_t n = chart.dimension();
  std::vector<Polynomial> family;
  for (std::size_t i = 0; i < n; ++i) family.push_back(chart.coordinate(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) family.push_back(chart.coordinate(i) * chart.coordinate(j));
  }
  return family;
}

std::vector<std::pair<std::string, std::string>> tuple_inputs(const Chart& chart,
                                                              const std::vector<Polynomial>& fs,
                                                              const std::vector<Polynomial>& gs) {
  std::vector<std::pair<std::string, std::string>> inputs;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    inputs.emplace_back("f" + std::to_string(i + 1), to_string(fs[i], chart.names()));
  }
  for (std::size_t i = 0; i < gs.size(); ++i) {
    inputs.emplace_back("g" + std::to_string(i + 1), to_string(gs[i], chart.names()));
  }
  return inputs;
}

template <class Visit>
void for_each_subset(std::size_t size, std::size_t k, Visit&& visit) {
  for (const auto& idx : multi_indices(size, k)) {
    if (!visit(idx)) return;
  }
}

using Gradients = std::vector<std::vector<Polynomial>>;

Gradients gradients(const Chart& chart, const std::vector<Polynomial>& fs) {
  for (const auto& f : fs) {
    if (f.dimension() != chart.dimension()) {
      throw DimensionMismatch("function in " + std::to_string(f.dimension()) +
                              " variables on a chart of dimension " +
                              std::to_string(chart.dimension()));
    }
  }
  Gradients g;
  for (const auto& f : fs) {
    std::vector<Polynomial> row;
    for (std::size_t i = 0; i < chart.dimension(); ++i) row.push_back(partial(f, i));
    g.push_back(std::move(row));
  }
  return g;
}

// Jacobian minor det[d f_r / d x_{cols[c]}] over rows from..end, Laplace along the first row.
Polynomial minor(const Gradients& g, std::size_t from, const std::vector<std::size_t>& cols,
                 std::size_t dim) {
  if (from == g.size()) return Polynomial::constant(dim, Rational(1));
  Polynomial out(dim);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Polynomial& entry = g[from][cols[c]];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest(cols);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(c));
    Polynomial sub = minor(g, from + 1, rest, dim);
    if (sub.is_zero()) continue;
    if (c % 2 == 0) out += entry * sub;
    else out -= entry * sub;
  }
  return out;
}

}  // namespace

Polynomial nambu_bracket(const NambuStructure& s, const std::vector<Polynomial>& fs) {
  require_arity(fs, s.order(), "Nambu bracket");
  const std::size_t n = s.chart().dimension();
  const auto g = gradients(s.chart(), fs);
  Polynomial out(n);
  for (const auto& [idx, coeff] : s.lambda().components()) {
    std::vector<std::size_t> cols(idx.begin(), idx.end());
    out += coeff * minor(g, 0, cols, n);
  }
  return out;
}

MultivectorField hamiltonian_field(const NambuStructure& s, const std::vector<Polynomial>& fs) {
  require_arity(fs, s.order() - 1, "Hamiltonian field");
  const Chart& chart = s.chart();
  const std::size_t n = chart.dimension();
  const auto g = gradients(chart, fs);
  std::vector<Polynomial> comps(n, Polynomial(n));
  for (const auto& [idx, coeff] : s.lambda().components()) {
    std::vector<std::size_t> cols(idx.begin(), idx.end());
    const std::size_t p = cols.size();
    for (std::size_t q = 0; q < p; ++q) {
      std::vector<std::size_t> rest(cols);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(q));
      Polynomial m = minor(g, 0, rest, n);
      if (m.is_zero()) continue;
      // Moving the freed index to the back of the contracted slot.
      if ((p - 1 - q) % 2 == 0) comps[cols[q]] += coeff * m;
      else comps[cols[q]] -= coeff * m;
    }
  }
  return vector_field(chart, comps);
}

Polynomial fundamental_identity_defect(const NambuStructure& s, const std::vector<Polynomial>& fs,
                                       const std::vector<Polynomial>& gs) {
  require_arity(fs, s.order() - 1, "fundamental identity (f tuple)");
  require_arity(gs, s.order(), "fundamental identity (g tuple)");
  auto with_last = [&](const Polynomial& h) {
    std::vector<Polynomial> args(fs);
    args.push_back(h);
    return args;
  };
  Polynomial defect = nambu_bracket(s, with_last(nambu_bracket(s, gs)));
  for (std::size_t i = 0; i < gs.size(); ++i) {
    std::vector<Polynomial> args(gs);
    args[i] = nambu_bracket(s, with_last(gs[i]));
    defect -= nambu_bracket(s, args);
  }
  return defect;
}

VerificationReport validate_nambu(const NambuStructure& s, const NambuValidationOptions& options) {
  const Chart& chart = s.chart();
  const std::size_t p = s.order();
  VerificationReport report;
  report.suite = "nambu-fi";
  report.structure = options.structure_label;
  report.variant = "n/a";
  report.trials = options.sampling.trials;
  report.seed = options.sampling.seed;
  report.notes.push_back(
      "sampled check: each violation is an exact certificate; a clean run is not a proof");

  const auto family = generator_family(chart);
  std::vector<Polynomial> coords;
  for (std::size_t i = 0; i < chart.dimension(); ++i) coords.push_back(chart.coordinate(i));

  std::size_t hamiltonian_index = 0;
  for_each_subset(family.size(), p - 1, [&](const MultiIndex& fi) {
    std::vector<Polynomial> fs;
    for (auto k : fi) fs.push_back(family[k]);
    MultivectorField drift = lie_derivative(hamiltonian_field(s, fs), s.lambda());
    if (!drift.is_zero()) {
      report.violations.push_back(
          {"hamiltonian", hamiltonian_index, tuple_inputs(chart, fs, {}), to_string(drift)});
    }
    ++hamiltonian_index;
    return true;
  });

  std::size_t structured = 0;
  for_each_subset(family.size(), p - 1, [&](const MultiIndex& fi) {
    std::vector<Polynomial> fs;
    for (auto k : fi) fs.push_back(family[k]);
    bool keep_going = true;
    for_each_subset(coords.size(), p, [&](const MultiIndex& gi) {
      if (structured >= options.structured_cap) {
        keep_going = false;
        return false;
      }
      std::vector<Polynomial> gs;
      for (auto k : gi) gs.push_back(coords[k]);
      Polynomial defect = fundamental_identity_defect(s, fs, gs);
      if (!defect.is_zero()) {
        report.violations.push_back(
            {"structured", structured, tuple_inputs(chart, fs, gs), to_string(defect, chart.names())});
      }
      ++structured;
      return true;
    });
    return keep_going;
  });

  const auto& sampling = options.sampling;
  for (std::size_t t = 0; t < sampling.trials; ++t) {
    Rng rng(sampling.seed + t);
    std::vector<Polynomial> fs;
    std::vector<Polynomial> gs;
    for (std::size_t i = 0; i + 1 < p; ++i) {
      fs.push_back(sample_polynomial(rng, chart.dimension(), sampling.max_degree, sampling.max_abs_coeff));
    }
    for (std::size_t i = 0; i < p; ++i) {
      gs.push_back(sample_polynomial(rng, chart.dimension(), sampling.max_degree, sampling.max_abs_coeff));
    }
    Polynomial defect = fundamental_identity_defect(s, fs, gs);
    if (!defect.is_zero()) {
      report.violations.push_back(
          {"random", t, tuple_inputs(chart, fs, gs), to_string(defect, chart.names())});
    }
  }
  return report;
}

}  // namespace nlab

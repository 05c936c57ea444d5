#include "nlab/dsl/render.hpp"

namespace nlab::dsl {

std::string render(const Polynomial& p, const Chart& chart) { return to_string(p, chart.names()); }

std::string render(const DifferentialForm& w) { return to_string(w); }

std::string render(const MultivectorField& p) { return to_string(p); }

std::string render(const Value& v, const Chart& chart) {
  return std::visit(
      [&](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Polynomial>) {
          return render(x, chart);
        } else {
          return render(x);
        }
      },
      v);
}

}  // namespace nlab::dsl

#include "nlab/ring/random.hpp"

#include <limits>

#include "nlab/errors.hpp"

namespace nlab {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % range);
}

Polynomial sample_polynomial(Rng& rng, std::size_t dimension, unsigned max_degree,
                             long max_abs_coeff) {
  if (max_abs_coeff < 1) throw Error("max_abs_coeff must be at least 1");
  Polynomial p(dimension);
  for (const auto& m : monomials_up_to(dimension, max_degree)) {
    p.add_term(m, Rational(static_cast<long>(rng.uniform(-max_abs_coeff, max_abs_coeff))));
  }
  return p;
}

}  // namespace nlab

#pragma once

#include <cstdint>
#include <random>

#include "nlab/ring/polynomial.hpp"

namespace nlab {

/// Seeded generator with a platform-independent output sequence.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// Bounded draws use rejection sampling on the raw 64-bit output rather
/// than std::uniform_int_distribution, whose algorithm is unspecified.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Random polynomial with total degree <= max_degree and integer coefficients
/// in [-max_abs_coeff, max_abs_coeff]. One coefficient is drawn per monomial,
/// in ascending graded-lex order.
Polynomial sample_polynomial(Rng& rng, std::size_t dimension, unsigned max_degree,
                             long max_abs_coeff);

}  // namespace nlab

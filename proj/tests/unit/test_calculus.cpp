#include <doctest.h>

#include "nlab/calculus/calculus.hpp"
#include "nlab/calculus/nambu.hpp"
#include "nlab/errors.hpp"
#include "support.hpp"

using namespace nlab;
using nlab::testing::random_form;
using nlab::testing::random_multivector;
using nlab::testing::random_poly;

namespace {

const Chart kR3(std::vector<std::string>{"x", "y", "z"});

DifferentialForm dx(std::vector<std::size_t> idx, const Chart& c = kR3) {
  return DifferentialForm::basis(c, MultiIndex(std::move(idx)));
}
MultivectorField e(std::vector<std::size_t> idx, const Chart& c = kR3) {
  return MultivectorField::basis(c, MultiIndex(std::move(idx)));
}
Polynomial X(std::size_t i) { return kR3.coordinate(i); }

}  // namespace

TEST_CASE("exterior derivative examples") {
  CHECK(exterior_derivative(X(0) * dx({1})) == dx({0, 1}));
  CHECK(exterior_derivative(X(0) * dx({1, 2})) == dx({0, 1, 2}));
  auto f = DifferentialForm::scalar(kR3, X(0) * X(1));
  CHECK(exterior_derivative(f) == X(1) * dx({0}) + X(0) * dx({1}));
  CHECK_THROWS_AS(exterior_derivative(dx({0, 1, 2})), DegreeOverflow);
}

TEST_CASE("Lie derivative examples") {
  CHECK(lie_derivative(X(0) * e({0}), dx({0})) == dx({0}));
  CHECK(lie_derivative(e({0}), X(0) * dx({1, 2})) == dx({1, 2}));
  CHECK(lie_derivative(e({0}) + e({2}), dx({0}) + Rational(3) * dx({1})).is_zero());
  CHECK(lie_derivative(X(0) * e({0}), dx({0, 1, 2})) == dx({0, 1, 2}));
  CHECK(commutator(X(0) * e({0}), e({0})) == -e({0}));
  CHECK(commutator(e({0}), e({1})).is_zero());
  CHECK(lie_derivative(e({0}), X(0) * e({1, 2})) == e({1, 2}));
  CHECK(lie_derivative(X(0) * e({0}), e({0})) == -e({0}));
}

TEST_CASE("calculus identities on sampled inputs") {
  Chart r4 = Chart::standard(4);
  for (std::uint64_t t = 0; t < 40; ++t) {
    Rng rng(500 + t);
    auto Xf = random_multivector(rng, r4, 1);
    auto Yf = random_multivector(rng, r4, 1);
    auto a = random_form(rng, r4, 1);
    auto b = random_form(rng, r4, 2);
    auto w = random_form(rng, r4, 2);
    auto P = random_multivector(rng, r4, 2);
    auto Q = random_multivector(rng, r4, 1);

    CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
    CHECK(lie_derivative(Xf, wedge(a, b)) ==
          wedge(lie_derivative(Xf, a), b) + wedge(a, lie_derivative(Xf, b)));
    CHECK(lie_derivative(Xf, exterior_derivative(w)) ==
          exterior_derivative(lie_derivative(Xf, w)));
    CHECK(lie_derivative(Xf, interior_product(Yf, w)) - interior_product(Yf, lie_derivative(Xf, w)) ==
          interior_product(commutator(Xf, Yf), w));
    CHECK(lie_derivative(Xf, lie_derivative(Yf, w)) - lie_derivative(Yf, lie_derivative(Xf, w)) ==
          lie_derivative(commutator(Xf, Yf), w));
    CHECK(lie_derivative(Xf, Yf) == commutator(Xf, Yf));
    CHECK(commutator(Xf, Xf).is_zero());
    CHECK(lie_derivative(Xf, wedge(P, Q)) ==
          wedge(lie_derivative(Xf, P), Q) + wedge(P, lie_derivative(Xf, Q)));
    CHECK(apply(Xf, pairing(P, w)) ==
          pairing(lie_derivative(Xf, P), w) + pairing(P, lie_derivative(Xf, w)));
  }
}

TEST_CASE("Nambu bracket examples") {
  auto s = nlab::testing::canonical(3);
  Chart c = s.chart();
  CHECK(nambu_bracket(s, {c.coordinate(0), c.coordinate(1), c.coordinate(2)}) == c.constant(Rational(1)));
  CHECK(nambu_bracket(s, {c.coordinate(0), c.coordinate(0), c.coordinate(2)}).is_zero());
  auto p2 = nlab::testing::canonical(2);
  CHECK(nambu_bracket(p2, {p2.chart().coordinate(0), p2.chart().coordinate(1)}) ==
        p2.chart().constant(Rational(1)));
  CHECK_THROWS_AS(nambu_bracket(s, {c.coordinate(0)}), ArityMismatch);
  CHECK_THROWS_AS(hamiltonian_field(s, {c.coordinate(0)}), ArityMismatch);
  CHECK_THROWS_AS(NambuStructure(2, e({0, 1, 2})), DegreeMismatch);
  CHECK_THROWS_AS(NambuStructure(4, MultivectorField(Chart::standard(3), 4)), DegreeMismatch);
  CHECK(hamiltonian_field(s, {c.coordinate(0), c.coordinate(1)}) == MultivectorField::basis(c, MultiIndex({2})));
}

TEST_CASE("Nambu bracket is alternating and matches the Hamiltonian field") {
  Chart r4 = Chart::standard(4);
  NambuStructure s(3, r4.coordinate(0) * MultivectorField::basis(r4, MultiIndex({0, 1, 2})) +
                          MultivectorField::basis(r4, MultiIndex({1, 2, 3})));
  for (std::uint64_t t = 0; t < 30; ++t) {
    Rng rng(600 + t);
    Polynomial f = random_poly(rng, 4), g = random_poly(rng, 4), h = random_poly(rng, 4);
    CHECK(nambu_bracket(s, {f, g, h}) == -nambu_bracket(s, {g, f, h}));
    CHECK(nambu_bracket(s, {f, g, h}) == nambu_bracket(s, {g, h, f}));
    CHECK(nambu_bracket(s, {f, f, h}).is_zero());
    CHECK(apply(hamiltonian_field(s, {f, g}), h) == nambu_bracket(s, {f, g, h}));
    CHECK(nambu_bracket(s, {f, g, h}) == pairing(s.lambda(), wedge_of_differentials(r4, {f, g, h})));
  }
}

TEST_CASE("fundamental identity") {
  auto s = nlab::testing::canonical(3);
  Chart c = s.chart();
  Polynomial x = c.coordinate(0), y = c.coordinate(1), z = c.coordinate(2);
  CHECK(fundamental_identity_defect(s, {x * x, y}, {x, y, z}).is_zero());
  CHECK(fundamental_identity_defect(s, {x, z}, {y, x, z}).is_zero());

  Chart r6 = Chart::standard(6);
  NambuStructure bad(3, MultivectorField::basis(r6, MultiIndex({0, 1, 2})) +
                            MultivectorField::basis(r6, MultiIndex({3, 4, 5})));
  bool found = false;
  for (std::uint64_t t = 0; t < 20 && !found; ++t) {
    Rng rng(700 + t);
    std::vector<Polynomial> fs{random_poly(rng, 6), random_poly(rng, 6)};
    std::vector<Polynomial> gs{random_poly(rng, 6), random_poly(rng, 6), random_poly(rng, 6)};
    found = !fundamental_identity_defect(bad, fs, gs).is_zero();
  }
  CHECK(found);
}

TEST_CASE("validate_nambu") {
  NambuValidationOptions opts;
  opts.sampling.trials = 10;
  CHECK(validate_nambu(nlab::testing::canonical(3), opts).passed());
  Chart r4 = Chart::standard(4);
  CHECK(validate_nambu(NambuStructure(3, r4.coordinate(0) *
                                             MultivectorField::basis(r4, MultiIndex({0, 1, 2}))),
                       opts)
            .passed());
  Chart r6 = Chart::standard(6);
  NambuStructure bad(3, MultivectorField::basis(r6, MultiIndex({0, 1, 2})) +
                            MultivectorField::basis(r6, MultiIndex({3, 4, 5})));
  auto report = validate_nambu(bad, opts);
  CHECK_FALSE(report.passed());
  CHECK(report.suite == "nambu-fi");
  auto again = validate_nambu(bad, opts);
  CHECK(to_json(report).dump() == to_json(again).dump());
}

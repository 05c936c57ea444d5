#include <doctest.h>

#include "nlab/algebroid/checks.hpp"
#include "nlab/algebroid/suite.hpp"
#include "nlab/calculus/calculus.hpp"
#include "nlab/errors.hpp"
#include "support.hpp"

using namespace nlab;
using nlab::testing::canonical;

namespace {

const BracketVariant kIbanezDim{BracketKind::Ibanez, SignExponent::Dimension};
const BracketVariant kIbanezOrder{BracketKind::Ibanez, SignExponent::Order};
const BracketVariant kHagiwara{BracketKind::Hagiwara, SignExponent::Dimension};

DifferentialForm dx(const Chart& c, std::vector<std::size_t> idx) {
  return DifferentialForm::basis(c, MultiIndex(std::move(idx)));
}
MultivectorField e(const Chart& c, std::vector<std::size_t> idx) {
  return MultivectorField::basis(c, MultiIndex(std::move(idx)));
}

NambuStructure poisson_r4() {
  Chart c = Chart::standard(4);
  return NambuStructure(2, e(c, {0, 1}) + e(c, {2, 3}));
}

NambuStructure linear_r4() {
  Chart c = Chart::standard(4);
  return NambuStructure(3, c.coordinate(0) * e(c, {0, 1, 2}));
}

// Ibanez formula with the function term's sign flipped.
LeibnizBracket wrong_sign(const NambuStructure& s) {
  return LeibnizBracket(s, "wrong-sign", [](const NambuStructure& st, const Section& a, const Section& b) {
    return bracket(st, kIbanezDim, a, b) - Rational(2) * (bracket(st, kIbanezDim, a, b) -
                                                          lie_derivative(anchor_pi(st, a), b));
  });
}

// Lie derivative term negated: the bracket still satisfies the defining relation,
// but with the opposite anchor.
LeibnizBracket flipped_lie(const NambuStructure& s) {
  return LeibnizBracket(s, "flipped-lie", [](const NambuStructure& st, const Section& a, const Section& b) {
    return bracket(st, kIbanezDim, a, b) - Rational(2) * lie_derivative(anchor_pi(st, a), b);
  });
}

LeibnizBracket symmetrized(const NambuStructure& s) {
  return LeibnizBracket(s, "symmetrized", [](const NambuStructure& st, const Section& a, const Section& b) {
    return lie_derivative(anchor_pi(st, a), b) + lie_derivative(anchor_pi(st, b), a);
  });
}

SamplingOptions trials(std::size_t n) {
  SamplingOptions o;
  o.trials = n;
  return o;
}

}  // namespace

TEST_CASE("anchor on canonical R3") {
  auto s = canonical(3);
  const Chart& c = s.chart();
  CHECK(anchor_pi(s, dx(c, {0, 1})) == e(c, {2}));
  CHECK(anchor_pi(s, c.coordinate(0) * dx(c, {1, 2})) == c.coordinate(0) * e(c, {0}));
  CHECK_THROWS_AS(anchor_pi(s, dx(c, {0})), DegreeMismatch);
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    auto f = nlab::testing::random_poly(rng, 3);
    auto b = sample_section(rng, s, 2, 3);
    CHECK(anchor_pi(s, f * b) == f * anchor_pi(s, b));
  }
}

TEST_CASE("worked bracket example") {
  auto s = canonical(3);
  const Chart& c = s.chart();
  Section a = c.coordinate(0) * dx(c, {1, 2});
  Section b = dx(c, {1, 2});
  CHECK(bracket(s, kIbanezDim, a, b) == -dx(c, {1, 2}));
  CHECK(bracket(s, kHagiwara, a, b) == -dx(c, {1, 2}));
  CHECK(bracket(s, kIbanezDim, a, zero_section(s)).is_zero());
  CHECK(bracket(s, kHagiwara, a, zero_section(s)).is_zero());
  CHECK_THROWS_AS(bracket(s, kIbanezDim, a, dx(c, {0})), DegreeMismatch);
  CHECK_THROWS_AS(bracket(s, kIbanezDim, a, dx(Chart(std::vector<std::string>{"x", "y", "z"}), {0, 1})), ChartMismatch);
  CHECK(kIbanezDim.name() == "ibanez(sign=dim)");
  CHECK(kIbanezOrder.name() == "ibanez(sign=order)");
  CHECK(kHagiwara.name() == "hagiwara");
}

TEST_CASE("anchor extraction") {
  auto s = canonical(3);
  const Chart& c = s.chart();
  LeibnizBracket ib(s, kIbanezDim), hg(s, kHagiwara);
  auto a = derive_anchor(ib, c.coordinate(0) * dx(c, {1, 2}));
  CHECK(a.as_vector_field() == c.coordinate(0) * e(c, {0}));
  CHECK(derive_anchor(ib, zero_section(s)).as_vector_field().is_zero());
  CHECK(derive_anchor(hg, dx(c, {0, 1})).as_vector_field() == e(c, {2}));
  Polynomial x = c.coordinate(0);
  CHECK(derive_anchor(hg, dx(c, {1, 2})).apply(x * x) == Rational(2) * x);
  CHECK(derivation_defect(hg, dx(c, {1, 2}), x, x).is_zero());
}

TEST_CASE("homomorphism and Leibniz rule on worked inputs") {
  auto s = canonical(3);
  const Chart& c = s.chart();
  LeibnizBracket ib(s, kIbanezDim);
  Section a = c.coordinate(0) * dx(c, {1, 2});
  Section b = dx(c, {1, 2});
  CHECK(anchor_pi(s, ib(a, b)) == -e(c, {0}));
  CHECK(anchor_homomorphism_defect(ib, a, b).is_zero());
  CHECK(anchor_homomorphism_defect(ib, a, b, AnchorSource::Derived).is_zero());
  CHECK(anchor_homomorphism_defect(ib, a, a).is_zero());
  CHECK(leibniz_rule_defect(ib, a, b, c.constant(Rational(1))).is_zero());
  CHECK(leibniz_identity_defect(ib, zero_section(s), zero_section(s), zero_section(s)).is_zero());
  auto anti = antisymmetry_defects(ib, a, a);
  CHECK(anti.bracket_defect == Rational(2) * ib(a, a));
  CHECK(anti.anchored_defect.is_zero());
  auto cmp = compare_variants(s, a, b, SignExponent::Dimension);
  CHECK(cmp.raw_difference.is_zero());
  CHECK(cmp.anchored_difference.is_zero());
}

TEST_CASE("suites pass on canonical structures") {
  for (std::size_t n : {2u, 3u}) {
    auto s = canonical(n);
    for (const auto& v : {kIbanezDim, kIbanezOrder, kHagiwara}) {
      LeibnizBracket b(s, v);
      for (Suite suite : all_suites()) {
        auto r = run_suite(b, suite, trials(8), "canonical");
        CHECK_MESSAGE(r.passed(), suite_name(suite), " ", v.name(), " n=", n);
      }
    }
  }
}

TEST_CASE("Koszul case is skew") {
  auto s = canonical(2);
  LeibnizBracket hg(s, kHagiwara);
  for (std::uint64_t t = 0; t < 20; ++t) {
    Rng rng(800 + t);
    auto a = sample_section(rng, s, 2, 3);
    auto b = sample_section(rng, s, 2, 3);
    CHECK(antisymmetry_defects(hg, a, b).bracket_defect.is_zero());
  }
  auto p = poisson_r4();
  LeibnizBracket hg4(p, kHagiwara);
  Rng rng(9);
  auto a = sample_section(rng, p, 2, 3);
  auto b = sample_section(rng, p, 2, 3);
  CHECK(antisymmetry_defects(hg4, a, b).bracket_defect.is_zero());
}

TEST_CASE("order sign is the one that works below top degree") {
  auto s = linear_r4();
  CHECK(run_suite(LeibnizBracket(s, kIbanezOrder), Suite::LeibnizIdentity, trials(5), "L").passed());
  CHECK_FALSE(run_suite(LeibnizBracket(s, kIbanezDim), Suite::LeibnizIdentity, trials(5), "L").passed());
  CHECK(run_suite(LeibnizBracket(s, kHagiwara), Suite::LeibnizIdentity, trials(5), "L").passed());
  auto r = run_suite(LeibnizBracket(s, kIbanezOrder), Suite::VariantCompare, trials(5), "L");
  CHECK(r.passed());
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes.front().find("nonzero on 0 of") == std::string::npos);
}

TEST_CASE("Ibanez formula breaks on a non-decomposable Poisson tensor") {
  auto s = poisson_r4();
  const Chart& c = s.chart();
  Section a = c.coordinate(0) * dx(c, {2});
  Section b = dx(c, {1});
  LeibnizBracket ib(s, kIbanezOrder), hg(s, kHagiwara);
  CHECK(ib(a, b).is_zero());
  CHECK(commutator(anchor_pi(s, a), anchor_pi(s, b)) == e(c, {3}));
  CHECK(anchor_homomorphism_defect(ib, a, b) == -e(c, {3}));
  CHECK(anchor_homomorphism_defect(hg, a, b).is_zero());
}

TEST_CASE("negative controls") {
  Chart r6 = Chart::standard(6);
  NambuStructure bad(3, e(r6, {0, 1, 2}) + e(r6, {3, 4, 5}));
  auto r = run_suite(LeibnizBracket(bad, kHagiwara), Suite::LeibnizIdentity, trials(3), "bad");
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().inputs.size() == 3);

  auto s = canonical(3);
  CHECK_FALSE(run_suite(wrong_sign(s), Suite::AnchorHomDerived, trials(10), "L").passed());

  const Chart& c = s.chart();
  Section a = c.coordinate(0) * dx(c, {1, 2});
  auto flipped = derive_anchor(flipped_lie(s), a);
  CHECK(flipped.as_vector_field() == -anchor_pi(s, a));

  CHECK_THROWS_AS(derive_anchor(symmetrized(s), a), ExtractionFailure);
  auto sym = run_suite(symmetrized(s), Suite::AnchorHomDerived, trials(3), "L");
  CHECK_FALSE(sym.passed());
  CHECK(sym.violations.front().origin == "extraction");
}

TEST_CASE("suite names and determinism") {
  for (Suite suite : all_suites()) CHECK(parse_suite(suite_name(suite)) == suite);
  CHECK_FALSE(parse_suite("nope").has_value());
  CHECK(all_suites().size() == 7);
  auto s = linear_r4();
  LeibnizBracket b(s, kIbanezDim);
  auto r1 = run_suite(b, Suite::AntisymAnchored, trials(1), "L");
  auto r2 = run_suite(b, Suite::AntisymAnchored, trials(1), "L");
  CHECK(to_json(r1).dump() == to_json(r2).dump());
  Rng x(5), y(5);
  CHECK(sample_section(x, s, 2, 3) == sample_section(y, s, 2, 3));
}

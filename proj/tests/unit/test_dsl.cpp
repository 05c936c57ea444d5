#include <doctest.h>

#include "nlab/dsl/parser.hpp"
#include "nlab/dsl/render.hpp"
#include "nlab/errors.hpp"
#include "support.hpp"

using namespace nlab;
using namespace nlab::dsl;

namespace {

ParseError parse_failure(std::string_view text) {
  try {
    parse_scene(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  throw;
}

}  // namespace

TEST_CASE("canonical scene") {
  auto scene = parse_scene("dim 3\ncoords x y z\nstructure L order 3 = (1)*e1^e2^e3\nsection a = (x)*dx2^dx3\n");
  REQUIRE(scene.structures.size() == 1);
  const auto* L = scene.find_structure("L");
  REQUIRE(L != nullptr);
  CHECK(L->order() == 3);
  CHECK(L->lambda() == MultivectorField::basis(scene.chart, MultiIndex({0, 1, 2})));
  const auto* a = scene.find_section("a");
  REQUIRE(a != nullptr);
  CHECK(*a == scene.chart.coordinate(0) * DifferentialForm::basis(scene.chart, MultiIndex({1, 2})));
  CHECK(scene.find_section("b") == nullptr);
}

TEST_CASE("default coordinates, comments and function references") {
  auto scene = parse_scene("# header\ndim 3 # trailing\n\nfunc f = (x1+1)^2\nfunc g = f*x2 - 1/2\n");
  CHECK(scene.chart.names() == std::vector<std::string>{"x1", "x2", "x3"});
  const auto* g = scene.find_function("g");
  REQUIRE(g != nullptr);
  CHECK(render(*g, scene.chart) == "x1^2*x2 + 2*x1*x2 + x2 - 1/2");
}

TEST_CASE("checked-in scenes load") {
  for (const char* name : {"canonical_r3.nlab", "poisson_r2.nlab", "poisson_r4.nlab", "linear_r4.nlab",
                           "bad_r6.nlab"}) {
    CHECK_NOTHROW(parse_scene(nlab::testing::read_data(name)));
  }
}

TEST_CASE("scene errors carry positions") {
  auto dup = parse_failure("dim 3\ncoords x x z");
  CHECK(dup.line() == 2);
  CHECK(dup.column() == 10);
  CHECK(dup.token() == "x");
  CHECK(dup.kind() == ParseError::Kind::Semantic);

  auto deg = parse_failure("dim 3\nstructure L order 3 = (1)*e1^e2^e3\nsection a = (x1)*dx1\n");
  CHECK(deg.kind() == ParseError::Kind::DegreeMismatch);
  CHECK(deg.line() == 3);

  auto late = parse_failure("dim 3\nsection a = (x1)*dx1\nstructure L order 3 = (1)*e1^e2^e3\n");
  CHECK(late.kind() == ParseError::Kind::DegreeMismatch);

  CHECK(parse_failure("dim 3\nstructure L order 2 = (1)*e1^e2^e3\n").kind() ==
        ParseError::Kind::DegreeMismatch);
  CHECK(parse_failure("coords x\n").line() == 1);
  CHECK(parse_failure("dim 2\ndim 2\n").line() == 2);
  CHECK(parse_failure("dim 3\ncoords x y\n").line() == 2);
  CHECK(parse_failure("dim 2\ncoords dx1 y\n").column() == 8);
  CHECK(parse_failure("dim 3\nfunc f = q\n").token() == "q");
  CHECK(parse_failure("dim 3\nstructure L order 3 = (1)*dx1^dx2^dx3\n").token() == "dx1");
  CHECK(parse_failure("dim 3\nfunc f = 1\nfunc f = 2\n").line() == 3);
  CHECK(parse_failure("dim 3\nbogus\n").line() == 2);
  std::string what = parse_failure("dim 3\ncoords x x z").what();
  CHECK(what.find("2:10") == 0);
}

TEST_CASE("expressions") {
  Chart c = Chart::standard(3);
  auto w = parse_form("(2/3)*dx1 + (x1^2)*dx2", c);
  CHECK(w.components().size() == 2);
  CHECK(w.component(MultiIndex({0})) == c.constant(Rational::parse("2/3")));
  auto m = parse_multivector("(x1)*e1^e2^e3", c);
  CHECK(m == c.coordinate(0) * MultivectorField::basis(c, MultiIndex({0, 1, 2})));
  CHECK(parse_form("dx2^dx1", c) == -DifferentialForm::basis(c, MultiIndex({0, 1})));
  CHECK(parse_form("dx1^dx1", c).is_zero());
  CHECK(parse_form("-(x1)*dx1 - dx2", c) ==
        -(c.coordinate(0) * DifferentialForm::basis(c, MultiIndex({0}))) -
            DifferentialForm::basis(c, MultiIndex({1})));
  CHECK(parse_polynomial("x1^2 - 2/4*x2 + (x3-1)*(x3+1)", c) ==
        c.coordinate(0).pow(2) - Rational::parse("1/2") * c.coordinate(1) + c.coordinate(2).pow(2) -
            c.constant(Rational(1)));
  CHECK(parse_polynomial("-x1^2", c) == -c.coordinate(0).pow(2));
  CHECK(parse_polynomial("1/2^2", c) == c.constant(Rational::parse("1/4")));
  FunctionScope scope{{"f", c.coordinate(1)}};
  CHECK(parse_polynomial("f*f", c, scope) == c.coordinate(1).pow(2));
  CHECK(std::holds_alternative<MultivectorField>(parse_expression("e1", c, ExpressionKind::Multivector)));

  CHECK_THROWS_AS(parse_form("dx1^^dx2", c), ParseError);
  CHECK_THROWS_AS(parse_form("(x1)*e1", c), ParseError);
  CHECK_THROWS_AS(parse_multivector("dx1", c), ParseError);
  CHECK_THROWS_AS(parse_form("dx1 + dx1^dx2", c), ParseError);
  CHECK_THROWS_AS(parse_form("dx4", c), ParseError);
  CHECK_THROWS_AS(parse_form("(x1", c), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 x2", c), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2/0", c), ParseError);
  try {
    parse_form("dx1^^dx2", c);
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("rendering") {
  Chart c(std::vector<std::string>{"x", "y", "z"});
  CHECK(render(DifferentialForm::zero(c, 0)) == "(0)");
  CHECK(render(MultivectorField::basis(c, MultiIndex({2}))) == "(1)*e3");
  CHECK(render(parse_form("(x*y - 1)*dx1^dx3", c)) == "(x*y - 1)*dx1^dx3");
}

TEST_CASE("render then parse is the identity on sampled values") {
  Chart c(std::vector<std::string>{"x", "y", "z", "w"});
  for (std::uint64_t t = 0; t < 60; ++t) {
    Rng rng(900 + t);
    auto p = nlab::testing::random_poly(rng, 4, 3);
    p *= Rational(1, 1 + rng.uniform(0, 4));
    CHECK(parse_polynomial(render(p, c), c) == p);
    const auto k = static_cast<std::size_t>(rng.uniform(0, 4));
    auto w = nlab::testing::random_form(rng, c, k);
    CHECK(parse_form(render(w), c) == w);
    auto m = nlab::testing::random_multivector(rng, c, k);
    CHECK(parse_multivector(render(m), c) == m);
    CHECK(render(parse_form(render(w), c)) == render(w));
  }
}

TEST_CASE("tokenizer") {
  auto toks = tokenize("dim 3 # x\n(1/2)*dx1");
  CHECK(toks.front().kind == TokenKind::Ident);
  CHECK(toks[1].kind == TokenKind::Int);
  CHECK(toks[2].kind == TokenKind::Newline);
  CHECK(toks[3].line == 2);
  CHECK(toks[3].column == 1);
  CHECK(toks.back().kind == TokenKind::End);
  CHECK_THROWS_AS(tokenize("dim 3 $"), ParseError);
}

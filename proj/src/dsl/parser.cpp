#include "nlab/dsl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace nlab::dsl {

namespace {

/// k when `ident` is prefix followed by decimal digits.
std::optional<std::size_t> basis_number(std::string_view ident, std::string_view prefix) {
  if (ident.size() <= prefix.size() || ident.substr(0, prefix.size()) != prefix) return std::nullopt;
  auto digits = ident.substr(prefix.size());
  if (!std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return std::nullopt;
  }
  if (digits.size() > 9) return std::size_t(-1);
  return static_cast<std::size_t>(std::stoul(std::string(digits)));
}

bool looks_like_basis(std::string_view ident) {
  return basis_number(ident, "dx").has_value() || basis_number(ident, "e").has_value();
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(TokenKind k) const { return peek().kind == k; }

  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  bool accept(TokenKind k) {
    if (!at(k)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(const Token& t, const std::string& message,
                         ParseError::Kind kind = ParseError::Kind::Syntax) const {
    std::string shown = t.text;
    if (shown.empty()) shown = std::string(describe(t.kind));
    throw ParseError(kind, t.line, t.column, message, shown);
  }

  const Token& expect(TokenKind k, std::string_view production) {
    if (!at(k)) {
      fail(peek(), "expected " + std::string(describe(k)) + " in " + std::string(production));
    }
    return advance();
  }

  void skip_newlines() {
    while (accept(TokenKind::Newline)) {
    }
  }

  void expect_statement_end() {
    if (!at(TokenKind::Newline) && !at(TokenKind::End)) fail(peek(), "expected end of statement");
    accept(TokenKind::Newline);
  }

  // polyexpr := ['+'|'-'] product (('+'|'-') product)*
  Polynomial polynomial(const Chart& chart, const FunctionScope& scope) {
    Polynomial sum = chart.zero();
    bool negate = false;
    if (accept(TokenKind::Minus)) {
      negate = true;
    } else {
      accept(TokenKind::Plus);
    }
    Polynomial first = product(chart, scope);
    sum += negate ? -first : first;
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      bool minus = advance().kind == TokenKind::Minus;
      Polynomial next = product(chart, scope);
      sum += minus ? -next : next;
    }
    return sum;
  }

  // product := factor ('*' factor)*
  Polynomial product(const Chart& chart, const FunctionScope& scope) {
    Polynomial p = factor(chart, scope);
    while (accept(TokenKind::Star)) p *= factor(chart, scope);
    return p;
  }

  // factor := '-' factor | atom ['^' INT]
  Polynomial factor(const Chart& chart, const FunctionScope& scope) {
    if (accept(TokenKind::Minus)) return -factor(chart, scope);
    Polynomial base = atom(chart, scope);
    if (accept(TokenKind::Caret)) {
      const Token& e = expect(TokenKind::Int, "exponent");
      if (e.text.size() > 4) fail(e, "exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  // atom := INT ['/' INT] | IDENT | '(' polyexpr ')'
  Polynomial atom(const Chart& chart, const FunctionScope& scope) {
    const Token& t = peek();
    if (t.kind == TokenKind::Int) {
      advance();
      std::string literal = t.text;
      if (accept(TokenKind::Slash)) {
        const Token& den = expect(TokenKind::Int, "rational literal");
        if (std::all_of(den.text.begin(), den.text.end(), [](char c) { return c == '0'; })) {
          fail(den, "zero denominator in rational literal");
        }
        literal += "/" + den.text;
      }
      return chart.constant(Rational::parse(literal));
    }
    if (t.kind == TokenKind::Ident) {
      advance();
      if (auto i = chart.index_of(t.text)) return chart.coordinate(*i);
      if (auto it = scope.find(t.text); it != scope.end()) return it->second;
      if (looks_like_basis(t.text)) fail(t, "basis element not allowed inside a coefficient");
      fail(t, "unknown identifier in polynomial expression", ParseError::Kind::Semantic);
    }
    if (t.kind == TokenKind::LParen) {
      advance();
      Polynomial inner = polynomial(chart, scope);
      expect(TokenKind::RParen, "parenthesized polynomial");
      return inner;
    }
    fail(t, "expected number, coordinate, function name or '(' in polynomial expression");
  }

  // wedge := BASIS ('^' BASIS)*
  template <class Kind>
  std::vector<std::size_t> wedge(const Chart& chart) {
    constexpr bool is_form = std::is_same_v<Kind, FormKind>;
    const std::string_view prefix = is_form ? "dx" : "e";
    const std::string production = is_form ? "form basis 'dx<k>'" : "multivector basis 'e<k>'";
    std::vector<std::size_t> indices;
    do {
      const Token& t = peek();
      if (t.kind != TokenKind::Ident) fail(t, "expected " + production);
      auto k = basis_number(t.text, prefix);
      if (!k) fail(t, "expected " + production);
      if (*k < 1 || *k > chart.dimension()) {
        fail(t, "basis index outside 1.." + std::to_string(chart.dimension()),
             ParseError::Kind::Semantic);
      }
      advance();
      indices.push_back(*k - 1);
    } while (accept(TokenKind::Caret));
    return indices;
  }

  // formexpr := ['-'] term (('+'|'-') term)*
  // term     := '(' polyexpr ')' ['*' wedge] | wedge
  template <class Kind>
  Alternating<Kind> alternating(const Chart& chart, const FunctionScope& scope) {
    std::optional<Alternating<Kind>> result;
    bool negate = accept(TokenKind::Minus);
    while (true) {
      const Token& start = peek();
      Polynomial coeff = chart.constant(Rational(1));
      std::vector<std::size_t> indices;
      if (accept(TokenKind::LParen)) {
        coeff = polynomial(chart, scope);
        expect(TokenKind::RParen, "coefficient");
        if (accept(TokenKind::Star)) indices = wedge<Kind>(chart);
      } else {
        indices = wedge<Kind>(chart);
      }
      if (!result) {
        result.emplace(chart, indices.size());
      } else if (result->degree() != indices.size()) {
        fail(start, "term of degree " + std::to_string(indices.size()) + " in a sum of degree " +
                        std::to_string(result->degree()),
             ParseError::Kind::DegreeMismatch);
      }
      result->add_unsorted(std::move(indices), negate ? -coeff : coeff);
      if (at(TokenKind::Plus) || at(TokenKind::Minus)) {
        negate = advance().kind == TokenKind::Minus;
        continue;
      }
      break;
    }
    return *std::move(result);
  }

  Value expression(const Chart& chart, ExpressionKind kind, const FunctionScope& scope) {
    switch (kind) {
      case ExpressionKind::Function: return polynomial(chart, scope);
      case ExpressionKind::Form: return alternating<FormKind>(chart, scope);
      case ExpressionKind::Multivector: return alternating<VectorKind>(chart, scope);
    }
    fail(peek(), "unknown expression kind");
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <class T>
const T* find_named(const std::vector<Named<T>>& items, std::string_view name) {
  for (const auto& item : items) {
    if (item.name == name) return &item.value;
  }
  return nullptr;
}

}  // namespace

const NambuStructure* Scene::find_structure(std::string_view name) const {
  return find_named(structures, name);
}

const DifferentialForm* Scene::find_section(std::string_view name) const {
  return find_named(sections, name);
}

const Polynomial* Scene::find_function(std::string_view name) const {
  return find_named(functions, name);
}

Value parse_expression(std::string_view text, const Chart& chart, ExpressionKind kind,
                       const FunctionScope& scope) {
  Parser parser(tokenize(text));
  parser.skip_newlines();
  Value v = parser.expression(chart, kind, scope);
  parser.skip_newlines();
  if (!parser.at(TokenKind::End)) parser.fail(parser.peek(), "unexpected trailing input");
  return v;
}

Polynomial parse_polynomial(std::string_view text, const Chart& chart, const FunctionScope& scope) {
  return std::get<Polynomial>(parse_expression(text, chart, ExpressionKind::Function, scope));
}

DifferentialForm parse_form(std::string_view text, const Chart& chart, const FunctionScope& scope) {
  return std::get<DifferentialForm>(parse_expression(text, chart, ExpressionKind::Form, scope));
}

MultivectorField parse_multivector(std::string_view text, const Chart& chart,
                                   const FunctionScope& scope) {
  return std::get<MultivectorField>(parse_expression(text, chart, ExpressionKind::Multivector, scope));
}

Scene parse_scene(std::string_view text) {
  Parser p(tokenize(text));
  std::optional<std::size_t> dimension;
  std::optional<Chart> chart;
  std::vector<Named<NambuStructure>> structures;
  std::vector<std::pair<Named<DifferentialForm>, Token>> sections;
  std::vector<Named<Polynomial>> functions;
  FunctionScope scope;
  std::set<std::string> structure_names, section_names;

  auto require_chart = [&](const Token& at) -> const Chart& {
    if (!chart) {
      if (!dimension) p.fail(at, "'dim' must be declared first", ParseError::Kind::Semantic);
      chart = Chart::standard(*dimension);
    }
    return *chart;
  };
  auto check_section_degree = [&](const NambuStructure& s, const DifferentialForm& a,
                                  const std::string& name, const Token& at) {
    if (a.degree() + 1 != s.order()) {
      p.fail(at,
             "section '" + name + "' has degree " + std::to_string(a.degree()) +
                 " but an order-" + std::to_string(s.order()) + " structure needs degree " +
                 std::to_string(s.order() - 1),
             ParseError::Kind::DegreeMismatch);
    }
  };

  p.skip_newlines();
  while (!p.at(TokenKind::End)) {
    const Token keyword = p.peek();
    if (keyword.kind != TokenKind::Ident) {
      p.fail(keyword, "expected statement keyword (dim, coords, structure, section, func)");
    }
    p.advance();
    if (keyword.text == "dim") {
      if (dimension) p.fail(keyword, "'dim' declared twice", ParseError::Kind::Semantic);
      const Token& n = p.expect(TokenKind::Int, "dim statement");
      if (n.text.size() > 3 || std::stoul(n.text) < 1) {
        p.fail(n, "dimension must be between 1 and 999", ParseError::Kind::Semantic);
      }
      dimension = std::stoul(n.text);
    } else if (keyword.text == "coords") {
      if (!dimension) p.fail(keyword, "'dim' must be declared first", ParseError::Kind::Semantic);
      if (chart) p.fail(keyword, "coordinates already declared", ParseError::Kind::Semantic);
      std::vector<std::string> names;
      std::set<std::string> seen;
      while (p.at(TokenKind::Ident)) {
        const Token& t = p.advance();
        if (looks_like_basis(t.text)) {
          p.fail(t, "coordinate name collides with a basis token", ParseError::Kind::Semantic);
        }
        if (!seen.insert(t.text).second) {
          p.fail(t, "duplicate coordinate", ParseError::Kind::Semantic);
        }
        names.push_back(t.text);
      }
      if (names.size() != *dimension) {
        p.fail(keyword,
               "expected " + std::to_string(*dimension) + " coordinate names, got " +
                   std::to_string(names.size()),
               ParseError::Kind::Semantic);
      }
      chart = Chart(std::move(names));
    } else if (keyword.text == "structure") {
      const Chart& c = require_chart(keyword);
      const Token name = p.expect(TokenKind::Ident, "structure statement");
      if (!structure_names.insert(name.text).second) {
        p.fail(name, "duplicate structure name", ParseError::Kind::Semantic);
      }
      const Token& order_kw = p.expect(TokenKind::Ident, "structure statement");
      if (order_kw.text != "order") p.fail(order_kw, "expected 'order' in structure statement");
      const Token order = p.expect(TokenKind::Int, "structure order");
      p.expect(TokenKind::Equals, "structure statement");
      const Token value_start = p.peek();
      MultivectorField lambda = p.alternating<VectorKind>(c, scope);
      const std::size_t k = order.text.size() > 3 ? 0 : std::stoul(order.text);
      if (k < 2 || k > c.dimension()) {
        p.fail(order, "order must lie in 2.." + std::to_string(c.dimension()),
               ParseError::Kind::Semantic);
      }
      if (lambda.degree() != k) {
        p.fail(value_start,
               "multivector of degree " + std::to_string(lambda.degree()) + " for order " +
                   std::to_string(k),
               ParseError::Kind::DegreeMismatch);
      }
      NambuStructure s(k, std::move(lambda));
      for (const auto& [section, at] : sections) check_section_degree(s, section.value, section.name, at);
      structures.push_back({name.text, std::move(s)});
    } else if (keyword.text == "section") {
      const Chart& c = require_chart(keyword);
      const Token name = p.expect(TokenKind::Ident, "section statement");
      if (!section_names.insert(name.text).second) {
        p.fail(name, "duplicate section name", ParseError::Kind::Semantic);
      }
      p.expect(TokenKind::Equals, "section statement");
      const Token value_start = p.peek();
      DifferentialForm a = p.alternating<FormKind>(c, scope);
      for (const auto& s : structures) check_section_degree(s.value, a, name.text, value_start);
      sections.push_back({{name.text, std::move(a)}, value_start});
    } else if (keyword.text == "func") {
      const Chart& c = require_chart(keyword);
      const Token name = p.expect(TokenKind::Ident, "func statement");
      if (scope.count(name.text) || c.index_of(name.text)) {
        p.fail(name, "duplicate function name", ParseError::Kind::Semantic);
      }
      p.expect(TokenKind::Equals, "func statement");
      Polynomial f = p.polynomial(c, scope);
      scope.emplace(name.text, f);
      functions.push_back({name.text, std::move(f)});
    } else {
      p.fail(keyword, "unknown statement keyword");
    }
    p.expect_statement_end();
    p.skip_newlines();
  }

  if (!dimension) throw ParseError(ParseError::Kind::Semantic, 1, 1, "scene declares no 'dim'", "");
  if (!chart) chart = Chart::standard(*dimension);
  Scene scene{*chart, std::move(structures), {}, std::move(functions)};
  for (auto& [section, at] : sections) scene.sections.push_back(std::move(section));
  return scene;
}

}  // namespace nlab::dsl

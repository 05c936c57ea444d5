#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nlab/calculus/nambu.hpp"
#include "nlab/dsl/lexer.hpp"

namespace nlab::dsl {

template <class T>
struct Named {
  std::string name;
  T value;
};

/// Everything declared in a scene file, in declaration order.
struct Scene {
  Chart chart;
  std::vector<Named<NambuStructure>> structures;
  std::vector<Named<DifferentialForm>> sections;
  std::vector<Named<Polynomial>> functions;

  const NambuStructure* find_structure(std::string_view name) const;
  const DifferentialForm* find_section(std::string_view name) const;
  const Polynomial* find_function(std::string_view name) const;
};

/// Parses the line-oriented scene format:
///
///   dim 3
///   coords x y z
///   structure L order 3 = (1)*e1^e2^e3
///   section a = (x)*dx2^dx3
///   func f = x^2 - 2/3*y
///
/// Sections must have degree p-1 for every declared structure.
Scene parse_scene(std::string_view text);

enum class ExpressionKind { Function, Form, Multivector };
using Value = std::variant<Polynomial, DifferentialForm, MultivectorField>;

/// Named functions visible to coefficient expressions.
using FunctionScope = std::map<std::string, Polynomial, std::less<>>;

Value parse_expression(std::string_view text, const Chart& chart, ExpressionKind kind,
                       const FunctionScope& scope = {});
Polynomial parse_polynomial(std::string_view text, const Chart& chart, const FunctionScope& scope = {});
DifferentialForm parse_form(std::string_view text, const Chart& chart, const FunctionScope& scope = {});
MultivectorField parse_multivector(std::string_view text, const Chart& chart,
                                   const FunctionScope& scope = {});

}  // namespace nlab::dsl

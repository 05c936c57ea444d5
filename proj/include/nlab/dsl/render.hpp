#pragma once

#include <string>

#include "nlab/dsl/parser.hpp"

namespace nlab::dsl {

// Canonical text that parse_expression reads back to an equal value.
std::string render(const Polynomial& p, const Chart& chart);
std::string render(const DifferentialForm& w);
std::string render(const MultivectorField& p);
std::string render(const Value& v, const Chart& chart);

}  // namespace nlab::dsl

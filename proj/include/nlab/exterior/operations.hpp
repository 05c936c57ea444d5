#pragma once

#include <string>
#include <vector>

#include "nlab/exterior/alternating.hpp"

namespace nlab {

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
MultivectorField wedge(const MultivectorField& a, const MultivectorField& b);

/// Full contraction <P, w> = sum_I P^I w_I; pairs d_I with dx^J as delta_IJ.
Polynomial pairing(const MultivectorField& p, const DifferentialForm& w);

/// i(beta)P, the multivector characterized by <i(beta)P, g> = <P, beta ^ g>
/// for every form g of degree deg P - deg beta.
MultivectorField contract(const DifferentialForm& beta, const MultivectorField& p);

/// Interior product i_X w of a vector field into a form (an antiderivation).
DifferentialForm interior_product(const MultivectorField& x, const DifferentialForm& w);

/// Degree-1 multivector with the given components.
MultivectorField vector_field(const Chart& chart, const std::vector<Polynomial>& components);
/// Component i of a degree-1 element.
Polynomial vector_component(const MultivectorField& x, std::size_t index);
/// X(f) = sum_i X^i d_i f.
Polynomial apply(const MultivectorField& x, const Polynomial& f);

/// df1 ^ ... ^ dfk as a form, via the exterior derivative of each function.
DifferentialForm wedge_of_differentials(const Chart& chart, const std::vector<Polynomial>& fs);

}  // namespace nlab

namespace nlab {

/// Canonical text: "(x)*dx1^dx2 + (1)*dx2^dx3", components in multi-index
/// lex order, basis indices 1-based. Degree-0 elements render as "(f)" and
/// a zero element of degree k as "(0)*dx1^...^dxk".
std::string to_string(const DifferentialForm& w);
/// As for forms, with basis tokens "e1", "e2", ...
std::string to_string(const MultivectorField& p);

}  // namespace nlab

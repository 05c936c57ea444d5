#pragma once

#include "nlab/exterior/operations.hpp"

namespace nlab {

/// d(f dx^I) = sum_i (d_i f) dx^i ^ dx^I. Throws DegreeOverflow on top-degree forms.
DifferentialForm exterior_derivative(const DifferentialForm& w);

/// L_X w, defined by Cartan's formula d(i_X w) + i_X(dw); on functions, X(f).
DifferentialForm lie_derivative(const MultivectorField& x, const DifferentialForm& w);

/// Commutator of vector fields, [X,Y]^j = X^i d_i Y^j - Y^i d_i X^j.
MultivectorField commutator(const MultivectorField& x, const MultivectorField& y);

/// L_X P for a multivector P: the degree-0 derivation of the wedge algebra
/// extending f -> X(f) and d_i -> [X, d_i].
MultivectorField lie_derivative(const MultivectorField& x, const MultivectorField& p);

}  // namespace nlab

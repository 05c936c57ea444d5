#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nlab/calculus/calculus.hpp"
#include "nlab/report.hpp"

namespace nlab {

/// An order-p multivector Lambda on a chart, the candidate Nambu-Poisson tensor.
class NambuStructure {
 public:
  /// Throws DegreeMismatch unless 2 <= order <= n and deg lambda == order.
  NambuStructure(std::size_t order, MultivectorField lambda);

  const Chart& chart() const { return lambda_.chart(); }
  std::size_t order() const { return order_; }
  const MultivectorField& lambda() const { return lambda_; }

 private:
  std::size_t order_;
  MultivectorField lambda_;
};

/// {f1,...,fp} = <Lambda, df1 ^ ... ^ dfp>.
Polynomial nambu_bracket(const NambuStructure& s, const std::vector<Polynomial>& fs);

/// X = i(df1 ^ ... ^ df_{p-1}) Lambda, so that X(g) = {f1,...,f_{p-1},g}.
MultivectorField hamiltonian_field(const NambuStructure& s, const std::vector<Polynomial>& fs);

/// {f,{g1..gp}} - sum_i {g1,..,{f,gi},..,gp} for p-1 functions f and p functions g.
Polynomial fundamental_identity_defect(const NambuStructure& s, const std::vector<Polynomial>& fs,
                                       const std::vector<Polynomial>& gs);

struct NambuValidationOptions {
  SamplingOptions sampling;
  std::string structure_label = "structure";
  /// Upper bound on structured fundamental-identity tuples.
  std::size_t structured_cap = 5000;
};

/// Sampled check of the fundamental identity.
///
/// Structured tuples draw f from the family {x_i} + {x_i x_j} and g from the
/// coordinates; every Hamiltonian field of the family is also checked for
/// L_X Lambda = 0. Random tuples come from trial seeds seed + t. A reported
/// violation is an exact certificate; a clean report is evidence, not proof.
VerificationReport validate_nambu(const NambuStructure& s, const NambuValidationOptions& options);

}  // namespace nlab

#pragma once

#include <cstddef>
#include <vector>

#include "nlab/algebroid/bracket.hpp"

namespace nlab {

/// The anchor of a section recovered from the bracket alone, through
/// (a(X)f) Y = [[X, fY]] - f [[X, Y]].
struct ExtractedAnchor {
  Section source;
  /// action[i] = a(X) applied to the coordinate x_i.
  std::vector<Polynomial> action;

  MultivectorField as_vector_field() const;
  /// a(X)h = sum_i action[i] d_i h.
  Polynomial apply(const Polynomial& h) const;
};

/// The bracket residual is not a single scalar multiple of the probe
/// section, so no anchor reproduces the bracket. Carries the witness.
class ExtractionFailure : public Error {
 public:
  ExtractionFailure(std::string message, std::size_t coordinate, MultiIndex probe,
                    MultiIndex component, std::string residual);

  std::size_t coordinate() const { return coordinate_; }
  const MultiIndex& probe() const { return probe_; }
  const MultiIndex& component() const { return component_; }
  const std::string& residual() const { return residual_; }

 private:
  std::size_t coordinate_;
  MultiIndex probe_;
  MultiIndex component_;
  std::string residual_;
};

/// Probes f = x_i against every basis section dx^I and requires one common
/// quotient per coordinate. Never consults Pi.
ExtractedAnchor derive_anchor(const LeibnizBracket& bracket, const Section& a);

/// [[a,[[b,c]]]] - [[[[a,b]],c]] - [[b,[[a,c]]]]
Section leibniz_identity_defect(const LeibnizBracket& bracket, const Section& a, const Section& b,
                                const Section& c);

enum class AnchorSource { Structure, Derived };

/// rho([[a,b]]) - [rho(a), rho(b)] with rho = Pi or the derived anchor.
/// Derived mode propagates ExtractionFailure.
MultivectorField anchor_homomorphism_defect(const LeibnizBracket& bracket, const Section& a,
                                            const Section& b,
                                            AnchorSource source = AnchorSource::Structure);

/// [[a, f b]] - f [[a,b]] - (Pi(a) f) b
Section leibniz_rule_defect(const LeibnizBracket& bracket, const Section& a, const Section& b,
                            const Polynomial& f);

/// a(fg) - f a(g) - g a(f) for the derived anchor a of `x`.
Polynomial derivation_defect(const LeibnizBracket& bracket, const Section& x, const Polynomial& f,
                             const Polynomial& g);

struct AntisymmetryDefects {
  Section bracket_defect;            // [[a,b]] + [[b,a]], may be nonzero
  MultivectorField anchored_defect;  // Pi of the above
};

AntisymmetryDefects antisymmetry_defects(const LeibnizBracket& bracket, const Section& a,
                                         const Section& b);

struct VariantComparison {
  Section raw_difference;                // Ibanez - Hagiwara
  MultivectorField anchored_difference;  // Pi of the above
};

VariantComparison compare_variants(const NambuStructure& s, const Section& a, const Section& b,
                                   SignExponent sign);

}  // namespace nlab

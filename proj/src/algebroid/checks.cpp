#include "nlab/algebroid/checks.hpp"

#include <optional>

namespace nlab {

ExtractionFailure::ExtractionFailure(std::string message, std::size_t coordinate, MultiIndex probe,
                                     MultiIndex component, std::string residual)
    : Error(std::move(message)),
      coordinate_(coordinate),
      probe_(std::move(probe)),
      component_(std::move(component)),
      residual_(std::move(residual)) {}

MultivectorField ExtractedAnchor::as_vector_field() const {
  return vector_field(source.chart(), action);
}

Polynomial ExtractedAnchor::apply(const Polynomial& h) const {
  Polynomial out(h.dimension());
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (!action[i].is_zero()) out += action[i] * partial(h, i);
  }
  return out;
}

namespace {

std::string basis_label(const MultiIndex& index) {
  std::string s;
  for (auto i : index) {
    if (!s.empty()) s += '^';
    s += "dx" + std::to_string(i + 1);
  }
  return s.empty() ? "1" : s;
}

/// The scalar g with residual = g * probe, where probe is nonzero.
Polynomial scalar_quotient(const Section& residual, const Section& probe, std::size_t coordinate,
                           const MultiIndex& probe_index) {
  auto fail = [&](const MultiIndex& component, const std::string& why) -> ExtractionFailure {
    return ExtractionFailure("anchor extraction failed for x" + std::to_string(coordinate + 1) +
                                 " on probe " + basis_label(probe_index) + " at component " +
                                 basis_label(component) + ": " + why,
                             coordinate, probe_index, component, to_string(residual));
  };
  const auto& [lead_index, lead_coeff] = *probe.components().begin();
  auto quotient = try_exact_div(residual.component(lead_index), lead_coeff);
  if (!quotient) throw fail(lead_index, "component is not a polynomial multiple of the probe");
  Section rest = residual - (*quotient) * probe;
  if (!rest.is_zero()) {
    throw fail(rest.components().begin()->first, "residual is not proportional to the probe");
  }
  return *std::move(quotient);
}

}  // namespace

ExtractedAnchor derive_anchor(const LeibnizBracket& bracket, const Section& a) {
  const NambuStructure& s = bracket.structure();
  require_section(s, a);
  const Chart& chart = s.chart();
  ExtractedAnchor anchor{a, {}};
  const auto probes = multi_indices(chart.dimension(), s.order() - 1);
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    const Polynomial f = chart.coordinate(i);
    std::optional<Polynomial> common;
    for (const auto& probe_index : probes) {
      const Section probe = Section::basis(chart, probe_index);
      Section residual = bracket(a, f * probe) - f * bracket(a, probe);
      Polynomial g = scalar_quotient(residual, probe, i, probe_index);
      if (!common) {
        common = std::move(g);
      } else if (!(*common == g)) {
        throw ExtractionFailure("anchor extraction failed for x" + std::to_string(i + 1) +
                                    ": probe " + basis_label(probe_index) +
                                    " yields a different scalar than earlier probes",
                                i, probe_index, probe_index, to_string(residual));
      }
    }
    anchor.action.push_back(common ? *std::move(common) : chart.zero());
  }
  return anchor;
}

Section leibniz_identity_defect(const LeibnizBracket& bracket, const Section& a, const Section& b,
                                const Section& c) {
  return bracket(a, bracket(b, c)) - bracket(bracket(a, b), c) - bracket(b, bracket(a, c));
}

MultivectorField anchor_homomorphism_defect(const LeibnizBracket& bracket, const Section& a,
                                            const Section& b, AnchorSource source) {
  const Section ab = bracket(a, b);
  if (source == AnchorSource::Structure) {
    const NambuStructure& s = bracket.structure();
    return anchor_pi(s, ab) - commutator(anchor_pi(s, a), anchor_pi(s, b));
  }
  return derive_anchor(bracket, ab).as_vector_field() -
         commutator(derive_anchor(bracket, a).as_vector_field(),
                    derive_anchor(bracket, b).as_vector_field());
}

Section leibniz_rule_defect(const LeibnizBracket& bracket, const Section& a, const Section& b,
                            const Polynomial& f) {
  const MultivectorField rho = anchor_pi(bracket.structure(), a);
  return bracket(a, f * b) - f * bracket(a, b) - apply(rho, f) * b;
}

Polynomial derivation_defect(const LeibnizBracket& bracket, const Section& x, const Polynomial& f,
                             const Polynomial& g) {
  const ExtractedAnchor a = derive_anchor(bracket, x);
  return a.apply(f * g) - f * a.apply(g) - g * a.apply(f);
}

AntisymmetryDefects antisymmetry_defects(const LeibnizBracket& bracket, const Section& a,
                                         const Section& b) {
  Section sum = bracket(a, b) + bracket(b, a);
  MultivectorField anchored = anchor_pi(bracket.structure(), sum);
  return {std::move(sum), std::move(anchored)};
}

VariantComparison compare_variants(const NambuStructure& s, const Section& a, const Section& b,
                                   SignExponent sign) {
  Section diff = bracket(s, {BracketKind::Ibanez, sign}, a, b) -
                 bracket(s, {BracketKind::Hagiwara, sign}, a, b);
  MultivectorField anchored = anchor_pi(s, diff);
  return {std::move(diff), std::move(anchored)};
}

}  // namespace nlab

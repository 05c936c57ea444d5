#include "nlab/algebroid/bracket.hpp"

namespace nlab {

std::string BracketVariant::name() const {
  if (kind == BracketKind::Hagiwara) return "hagiwara";
  return sign == SignExponent::Dimension ? "ibanez(sign=dim)" : "ibanez(sign=order)";
}

void require_section(const NambuStructure& s, const Section& a) {
  require_same_chart(s.chart(), a.chart());
  if (a.degree() + 1 != s.order()) {
    throw DegreeMismatch("section has degree " + std::to_string(a.degree()) +
                         " but an order-" + std::to_string(s.order()) + " structure needs degree " +
                         std::to_string(s.order() - 1));
  }
}

Section zero_section(const NambuStructure& s) { return Section::zero(s.chart(), s.order() - 1); }

MultivectorField anchor_pi(const NambuStructure& s, const Section& a) {
  require_section(s, a);
  return contract(a, s.lambda());
}

Section bracket(const NambuStructure& s, const BracketVariant& v, const Section& a, const Section& b) {
  require_section(s, a);
  require_section(s, b);
  Section out = lie_derivative(anchor_pi(s, a), b);
  const DifferentialForm da = exterior_derivative(a);
  if (v.kind == BracketKind::Ibanez) {
    const std::size_t exponent = v.sign == SignExponent::Dimension ? s.chart().dimension() : s.order();
    Polynomial density = pairing(s.lambda(), da);
    if (exponent % 2 == 1) density = -density;
    out += density * b;
  } else {
    out -= interior_product(anchor_pi(s, b), da);
  }
  return out;
}

LeibnizBracket::LeibnizBracket(NambuStructure structure, BracketVariant variant)
    : structure_(std::move(structure)), label_(variant.name()), variant_(variant) {
  rule_ = [variant](const NambuStructure& s, const Section& a, const Section& b) {
    return bracket(s, variant, a, b);
  };
}

LeibnizBracket::LeibnizBracket(NambuStructure structure, std::string label, Rule rule)
    : structure_(std::move(structure)), label_(std::move(label)), rule_(std::move(rule)) {}

Section LeibnizBracket::operator()(const Section& a, const Section& b) const {
  require_section(structure_, a);
  require_section(structure_, b);
  Section out = rule_(structure_, a, b);
  require_section(structure_, out);
  return out;
}

}  // namespace nlab

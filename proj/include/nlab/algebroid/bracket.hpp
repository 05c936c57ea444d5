#pragma once

#include <functional>
#include <optional>
#include <string>

#include "nlab/calculus/nambu.hpp"

namespace nlab {

/// Sections of the bundle of (p-1)-forms attached to an order-p structure.
using Section = DifferentialForm;

enum class BracketKind { Ibanez, Hagiwara };

/// Exponent of the sign in front of the density term of the Ibanez bracket:
/// (-1)^n with n the chart dimension, or (-1)^p with p the structure order.
enum class SignExponent { Dimension, Order };

struct BracketVariant {
  BracketKind kind = BracketKind::Ibanez;
  SignExponent sign = SignExponent::Dimension;  // ignored by Hagiwara

  /// "ibanez(sign=dim)", "ibanez(sign=order)" or "hagiwara".
  std::string name() const;
};

/// Throws DegreeMismatch / ChartMismatch unless `a` is a (p-1)-form on the structure's chart.
void require_section(const NambuStructure& s, const Section& a);

Section zero_section(const NambuStructure& s);

/// Pi(a) = i(a) Lambda.
MultivectorField anchor_pi(const NambuStructure& s, const Section& a);

/// Ibanez:   [[a,b]] = L_{Pi a} b + sigma <Lambda, da> b
/// Hagiwara: [[a,b]] = L_{Pi a} b - i_{Pi b} da
Section bracket(const NambuStructure& s, const BracketVariant& v, const Section& a, const Section& b);

/// A bilinear bracket on sections bound to its structure.
///
/// Usually one of the two variants; custom rules let tests plug in
/// deliberately broken brackets as negative controls.
class LeibnizBracket {
 public:
  using Rule = std::function<Section(const NambuStructure&, const Section&, const Section&)>;

  LeibnizBracket(NambuStructure structure, BracketVariant variant);
  LeibnizBracket(NambuStructure structure, std::string label, Rule rule);

  const NambuStructure& structure() const { return structure_; }
  const std::string& label() const { return label_; }
  /// The underlying variant, if this is not a custom rule.
  const std::optional<BracketVariant>& variant() const { return variant_; }

  Section operator()(const Section& a, const Section& b) const;

 private:
  NambuStructure structure_;
  std::string label_;
  std::optional<BracketVariant> variant_;
  Rule rule_;
};

}  // namespace nlab

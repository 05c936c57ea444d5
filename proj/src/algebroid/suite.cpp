#include "nlab/algebroid/suite.hpp"

#include <array>

namespace nlab {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 7> kSuiteNames{{
    {Suite::LeibnizIdentity, "leibniz-id"},
    {Suite::LeibnizRule, "leibniz-rule"},
    {Suite::AnchorHom, "anchor-hom"},
    {Suite::AnchorHomDerived, "anchor-hom-derived"},
    {Suite::Derivation, "derivation"},
    {Suite::AntisymAnchored, "antisym-anchored"},
    {Suite::VariantCompare, "variant-compare"},
}};

using Inputs = std::vector<std::pair<std::string, std::string>>;

struct TrialDraw {
  Rng rng;
  const NambuStructure& s;
  const SamplingOptions& o;

  Section section() { return sample_section(rng, s, o.max_degree, o.max_abs_coeff); }
  Polynomial function() {
    return sample_polynomial(rng, s.chart().dimension(), o.max_degree, o.max_abs_coeff);
  }
};

std::string fn(const NambuStructure& s, const Polynomial& p) { return to_string(p, s.chart().names()); }

}  // namespace

std::string_view suite_name(Suite suite) {
  for (const auto& [s, name] : kSuiteNames) {
    if (s == suite) return name;
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [s, n] : kSuiteNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> v;
    for (const auto& entry : kSuiteNames) v.push_back(entry.first);
    return v;
  }();
  return suites;
}

Section sample_section(Rng& rng, const NambuStructure& s, unsigned max_degree, long max_abs_coeff) {
  Section out = zero_section(s);
  for (const auto& index : multi_indices(s.chart().dimension(), s.order() - 1)) {
    out.add(index, sample_polynomial(rng, s.chart().dimension(), max_degree, max_abs_coeff));
  }
  return out;
}

VerificationReport run_suite(const LeibnizBracket& bracket, Suite suite,
                             const SamplingOptions& options, const std::string& structure_label) {
  const NambuStructure& s = bracket.structure();
  VerificationReport report;
  report.suite = std::string(suite_name(suite));
  report.structure = structure_label;
  report.variant = bracket.label();
  report.trials = options.trials;
  report.seed = options.seed;

  std::size_t raw_nonzero = 0;
  std::optional<Violation> raw_witness;
  const SignExponent sign =
      bracket.variant() ? bracket.variant()->sign : SignExponent::Dimension;

  for (std::size_t t = 0; t < options.trials; ++t) {
    TrialDraw draw{Rng(options.seed + t), s, options};
    auto record = [&](std::string origin, Inputs inputs, std::string defect) {
      report.violations.push_back({std::move(origin), t, std::move(inputs), std::move(defect)});
    };
    switch (suite) {
      case Suite::LeibnizIdentity: {
        Section a = draw.section(), b = draw.section(), c = draw.section();
        Section d = leibniz_identity_defect(bracket, a, b, c);
        if (!d.is_zero()) {
          record("random", {{"alpha", to_string(a)}, {"beta", to_string(b)}, {"gamma", to_string(c)}},
                 to_string(d));
        }
        break;
      }
      case Suite::LeibnizRule: {
        Section a = draw.section(), b = draw.section();
        Polynomial f = draw.function();
        Section d = leibniz_rule_defect(bracket, a, b, f);
        if (!d.is_zero()) {
          record("random", {{"alpha", to_string(a)}, {"beta", to_string(b)}, {"f", fn(s, f)}},
                 to_string(d));
        }
        break;
      }
      case Suite::AnchorHom:
      case Suite::AnchorHomDerived: {
        Section a = draw.section(), b = draw.section();
        Inputs inputs{{"alpha", to_string(a)}, {"beta", to_string(b)}};
        try {
          MultivectorField d = anchor_homomorphism_defect(
              bracket, a, b,
              suite == Suite::AnchorHom ? AnchorSource::Structure : AnchorSource::Derived);
          if (!d.is_zero()) record("random", std::move(inputs), to_string(d));
        } catch (const ExtractionFailure& e) {
          record("extraction", std::move(inputs), e.what());
        }
        break;
      }
      case Suite::Derivation: {
        Section a = draw.section();
        Polynomial f = draw.function(), g = draw.function();
        Inputs inputs{{"alpha", to_string(a)}, {"f", fn(s, f)}, {"g", fn(s, g)}};
        try {
          Polynomial d = derivation_defect(bracket, a, f, g);
          if (!d.is_zero()) record("random", std::move(inputs), fn(s, d));
        } catch (const ExtractionFailure& e) {
          record("extraction", std::move(inputs), e.what());
        }
        break;
      }
      case Suite::AntisymAnchored: {
        Section a = draw.section(), b = draw.section();
        AntisymmetryDefects d = antisymmetry_defects(bracket, a, b);
        if (!d.bracket_defect.is_zero()) ++raw_nonzero;
        if (!d.anchored_defect.is_zero()) {
          record("random", {{"alpha", to_string(a)}, {"beta", to_string(b)}},
                 to_string(d.anchored_defect));
        }
        break;
      }
      case Suite::VariantCompare: {
        Section a = draw.section(), b = draw.section();
        VariantComparison d = compare_variants(s, a, b, sign);
        if (!d.raw_difference.is_zero()) {
          ++raw_nonzero;
          if (!raw_witness) {
            raw_witness = Violation{"random", t, {{"alpha", to_string(a)}, {"beta", to_string(b)}},
                                    to_string(d.raw_difference)};
          }
        }
        if (!d.anchored_difference.is_zero()) {
          record("random", {{"alpha", to_string(a)}, {"beta", to_string(b)}},
                 to_string(d.anchored_difference));
        }
        break;
      }
    }
  }

  if (suite == Suite::AntisymAnchored) {
    report.notes.push_back("raw [[a,b]] + [[b,a]] nonzero on " + std::to_string(raw_nonzero) +
                           " of " + std::to_string(options.trials) + " trials");
  }
  if (suite == Suite::VariantCompare) {
    report.notes.push_back("raw ibanez - hagiwara difference nonzero on " +
                           std::to_string(raw_nonzero) + " of " + std::to_string(options.trials) +
                           " trials");
    if (raw_witness) {
      report.notes.push_back("first raw difference at trial " + std::to_string(raw_witness->trial) +
                             ": alpha = " + raw_witness->inputs[0].second +
                             "; beta = " + raw_witness->inputs[1].second +
                             "; difference = " + raw_witness->defect);
    }
  }
  return report;
}

}  // namespace nlab

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlab/algebroid/checks.hpp"
#include "nlab/report.hpp"
#include "nlab/ring/random.hpp"

namespace nlab {

enum class Suite {
  LeibnizIdentity,   // leibniz-id
  LeibnizRule,       // leibniz-rule
  AnchorHom,         // anchor-hom
  AnchorHomDerived,  // anchor-hom-derived
  Derivation,        // derivation
  AntisymAnchored,   // antisym-anchored
  VariantCompare,    // variant-compare
};

std::string_view suite_name(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);
const std::vector<Suite>& all_suites();

/// Random section: one sampled coefficient per basis (p-1)-form, in lex order.
Section sample_section(Rng& rng, const NambuStructure& s, unsigned max_degree, long max_abs_coeff);

/// Runs one checker over seeded random inputs. Trial t draws its inputs from
/// Rng(seed + t), so reports depend only on the inputs and options.
VerificationReport run_suite(const LeibnizBracket& bracket, Suite suite,
                             const SamplingOptions& options, const std::string& structure_label);

}  // namespace nlab

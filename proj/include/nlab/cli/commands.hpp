#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nlab/algebroid/suite.hpp"
#include "nlab/dsl/parser.hpp"

namespace nlab::cli {

enum class Command { Validate, Bracket, Verify, Anchor };
enum class OutputFormat { Text, Json };

/// Exit codes: 0 all checks pass, 1 a violation was found, 2 usage or input error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Verify;
  std::string scene_path;
  std::optional<std::string> structure;  // first structure in the scene when unset
  BracketVariant variant;                // ibanez, sign=dim
  std::vector<Suite> suites;             // every suite when empty
  std::optional<std::string> alpha;
  std::optional<std::string> beta;
  SamplingOptions sampling;              // trials=100 seed=42 max_degree=2 max_abs_coeff=3
  OutputFormat format = OutputFormat::Text;
};

struct AnchorComparison {
  MultivectorField pi;
  std::optional<MultivectorField> derived;  // empty when extraction failed
  std::string failure;
  bool agree = false;
};

AnchorComparison compare_anchors(const LeibnizBracket& bracket, const Section& alpha);

int cmd_validate(const RunConfig& config, const dsl::Scene& scene, std::ostream& out);
int cmd_bracket(const RunConfig& config, const dsl::Scene& scene, std::ostream& out);
int cmd_verify(const RunConfig& config, const dsl::Scene& scene, std::ostream& out);
int cmd_anchor(const RunConfig& config, const dsl::Scene& scene, std::ostream& out);

/// Prints an anchor comparison; returns kExitPass iff the anchors agree.
int write_anchor_comparison(const AnchorComparison& c, const std::string& alpha_name,
                            OutputFormat format, std::ostream& out);

/// Loads the scene and dispatches; input errors are reported on `err` with exit code 2.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point. `env_seed` is the value of NLAB_SEED, if any;
/// an explicit --seed takes precedence over it.
int main_entry(int argc, const char* const* argv, const char* env_seed, std::ostream& out,
               std::ostream& err);

}  // namespace nlab::cli

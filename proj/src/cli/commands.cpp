#include "nlab/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace nlab::cli {

namespace {

class InputError : public Error {
 public:
  using Error::Error;
};

std::string structure_name(const RunConfig& config, const dsl::Scene& scene) {
  if (scene.structures.empty()) throw InputError("scene declares no structure");
  if (!config.structure) return scene.structures.front().name;
  if (!scene.find_structure(*config.structure)) {
    throw InputError("unknown structure '" + *config.structure + "'");
  }
  return *config.structure;
}

const Section& section_named(const dsl::Scene& scene, const std::optional<std::string>& name,
                             const char* option) {
  if (!name) throw InputError(std::string("missing ") + option);
  const Section* s = scene.find_section(*name);
  if (!s) throw InputError("unknown section '" + *name + "'");
  return *s;
}

void emit_json(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }

}  // namespace

AnchorComparison compare_anchors(const LeibnizBracket& bracket, const Section& alpha) {
  AnchorComparison c{anchor_pi(bracket.structure(), alpha), std::nullopt, {}, false};
  try {
    c.derived = derive_anchor(bracket, alpha).as_vector_field();
    c.agree = *c.derived == c.pi;
  } catch (const ExtractionFailure& e) {
    c.failure = e.what();
  }
  return c;
}

int write_anchor_comparison(const AnchorComparison& c, const std::string& alpha_name,
                            OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["alpha"] = alpha_name;
    j["derived"] = c.derived ? nlohmann::ordered_json(to_string(*c.derived)) : nullptr;
    j["pi"] = to_string(c.pi);
    j["agree"] = c.agree;
    if (!c.failure.empty()) j["failure"] = c.failure;
    emit_json(out, j);
  } else {
    out << "derived: " << (c.derived ? to_string(*c.derived) : "extraction failed") << '\n';
    if (!c.failure.empty()) out << "failure: " << c.failure << '\n';
    out << "pi: " << to_string(c.pi) << '\n';
    out << "agree: " << (c.agree ? "true" : "false") << '\n';
  }
  return c.agree ? kExitPass : kExitViolation;
}

int cmd_validate(const RunConfig& config, const dsl::Scene& scene, std::ostream& out) {
  const std::string name = structure_name(config, scene);
  NambuValidationOptions options;
  options.sampling = config.sampling;
  options.structure_label = name;
  VerificationReport report = validate_nambu(*scene.find_structure(name), options);
  if (config.format == OutputFormat::Json) {
    emit_json(out, to_json(report));
  } else {
    write_text(out, report);
  }
  return report.passed() ? kExitPass : kExitViolation;
}

int cmd_bracket(const RunConfig& config, const dsl::Scene& scene, std::ostream& out) {
  const std::string name = structure_name(config, scene);
  const Section& a = section_named(scene, config.alpha, "--alpha");
  const Section& b = section_named(scene, config.beta, "--beta");
  LeibnizBracket bracket(*scene.find_structure(name), config.variant);
  Section result = bracket(a, b);
  if (config.format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["structure"] = name;
    j["variant"] = bracket.label();
    j["alpha"] = *config.alpha;
    j["beta"] = *config.beta;
    j["bracket"] = to_string(result);
    emit_json(out, j);
  } else {
    out << to_string(result) << '\n';
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& config, const dsl::Scene& scene, std::ostream& out) {
  const std::string name = structure_name(config, scene);
  LeibnizBracket bracket(*scene.find_structure(name), config.variant);
  const std::vector<Suite>& suites = config.suites.empty() ? all_suites() : config.suites;
  bool all_passed = true;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (Suite suite : suites) {
    VerificationReport report = run_suite(bracket, suite, config.sampling, name);
    all_passed = all_passed && report.passed();
    if (config.format == OutputFormat::Json) {
      reports.push_back(to_json(report));
    } else {
      write_text(out, report);
    }
  }
  if (config.format == OutputFormat::Json) emit_json(out, reports);
  return all_passed ? kExitPass : kExitViolation;
}

int cmd_anchor(const RunConfig& config, const dsl::Scene& scene, std::ostream& out) {
  const std::string name = structure_name(config, scene);
  const Section& a = section_named(scene, config.alpha, "--alpha");
  LeibnizBracket bracket(*scene.find_structure(name), config.variant);
  return write_anchor_comparison(compare_anchors(bracket, a), *config.alpha, config.format, out);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream file(config.scene_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open scene file '" << config.scene_path << "'\n";
    return kExitUsage;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  try {
    const dsl::Scene scene = dsl::parse_scene(buffer.str());
    switch (config.command) {
      case Command::Validate: return cmd_validate(config, scene, out);
      case Command::Bracket: return cmd_bracket(config, scene, out);
      case Command::Verify: return cmd_verify(config, scene, out);
      case Command::Anchor: return cmd_anchor(config, scene, out);
    }
  } catch (const dsl::ParseError& e) {
    err << config.scene_path << ":" << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(int argc, const char* const* argv, const char* env_seed, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact verification of Leibniz algebroid axioms for Nambu-Poisson structures",
               "nlab"};
  app.require_subcommand(1);

  RunConfig config;
  std::string variant = "ibanez";
  std::string sign = "dim";
  std::string suites;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::string structure, alpha, beta;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("scene", config.scene_path, "Scene file")->required();
    sub->add_option("--structure", structure, "Structure name (default: first in scene)");
    sub->add_option("--variant", variant, "Bracket variant")
        ->check(CLI::IsMember({"ibanez", "hagiwara"}));
    sub->add_option("--sign", sign, "Ibanez sign exponent")->check(CLI::IsMember({"dim", "order"}));
    sub->add_option("--suite", suites, "Comma-separated suites (default: all)");
    sub->add_option("--alpha", alpha, "Section name");
    sub->add_option("--beta", beta, "Section name");
    sub->add_option("--trials", config.sampling.trials, "Number of trials")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Seed (default 42, or NLAB_SEED)");
    sub->add_option("--max-degree", config.sampling.max_degree, "Max coefficient degree");
    sub->add_option("--max-abs-coeff", config.sampling.max_abs_coeff, "Max |coefficient|")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto* validate = app.add_subcommand("validate", "Sampled fundamental-identity check");
  auto* bracket = app.add_subcommand("bracket", "Print [[alpha,beta]]");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  auto* anchor = app.add_subcommand("anchor", "Compare derived anchor with Pi");
  for (auto* sub : {validate, bracket, verify, anchor}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (validate->parsed()) config.command = Command::Validate;
  if (bracket->parsed()) config.command = Command::Bracket;
  if (verify->parsed()) config.command = Command::Verify;
  if (anchor->parsed()) config.command = Command::Anchor;

  config.variant.kind = variant == "hagiwara" ? BracketKind::Hagiwara : BracketKind::Ibanez;
  config.variant.sign = sign == "order" ? SignExponent::Order : SignExponent::Dimension;
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (!structure.empty()) config.structure = structure;
  if (!alpha.empty()) config.alpha = alpha;
  if (!beta.empty()) config.beta = beta;

  if (seed) {
    config.sampling.seed = *seed;
  } else if (env_seed && *env_seed) {
    try {
      std::size_t used = 0;
      config.sampling.seed = std::stoull(env_seed, &used);
      if (env_seed[used] != '\0') throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      err << "error: NLAB_SEED is not an unsigned integer: '" << env_seed << "'\n";
      return kExitUsage;
    }
  }

  std::stringstream list(suites);
  for (std::string item; std::getline(list, item, ',');) {
    if (item.empty()) continue;
    auto s = parse_suite(item);
    if (!s) {
      err << "error: unknown suite '" << item << "'\n";
      return kExitUsage;
    }
    config.suites.push_back(*s);
  }
  return run(config, out, err);
}

}  // namespace nlab::cli

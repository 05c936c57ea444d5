#include "nlab/report.hpp"

#include <ostream>

namespace nlab {

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["structure"] = report.structure;
  j["variant"] = report.variant;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["passed"] = report.passed();
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    nlohmann::ordered_json entry;
    entry["origin"] = v.origin;
    entry["trial"] = v.trial;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [name, value] : v.inputs) inputs[name] = value;
    entry["inputs"] = std::move(inputs);
    entry["defect"] = v.defect;
    j["violations"].push_back(std::move(entry));
  }
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j;
}

void write_text(std::ostream& out, const VerificationReport& report) {
  out << report.suite << " [" << report.structure << ", " << report.variant
      << "]: " << (report.passed() ? "PASS" : "FAIL") << " (trials=" << report.trials
      << " seed=" << report.seed << " violations=" << report.violations.size() << ")\n";
  for (const auto& note : report.notes) out << "  note: " << note << '\n';
  for (const auto& v : report.violations) {
    out << "  violation (" << v.origin << " #" << v.trial << ")\n";
    for (const auto& [name, value] : v.inputs) out << "    " << name << " = " << value << '\n';
    out << "    defect = " << v.defect << '\n';
  }
}

}  // namespace nlab

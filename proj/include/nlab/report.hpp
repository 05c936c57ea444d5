#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace nlab {

/// Knobs shared by every sampled check.
struct SamplingOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  unsigned max_degree = 2;
  long max_abs_coeff = 3;
};

/// One nonzero defect, with the inputs that produced it rendered in the
/// scene grammar so they can be fed back to the tool.
struct Violation {
  std::string origin;  // "random", "structured", "hamiltonian", "extraction"
  std::size_t trial = 0;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string defect;
};

struct VerificationReport {
  std::string suite;
  std::string structure;
  std::string variant;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
};

nlohmann::ordered_json to_json(const VerificationReport& report);
void write_text(std::ostream& out, const VerificationReport& report);

}  // namespace nlab

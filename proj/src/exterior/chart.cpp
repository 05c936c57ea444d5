#include "nlab/exterior/chart.hpp"

#include <algorithm>
#include <set>

#include "nlab/errors.hpp"

namespace nlab {

Chart::Chart(std::vector<std::string> names) {
  if (names.empty()) throw Error("chart needs at least one coordinate");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("empty coordinate name");
    if (!seen.insert(n).second) throw Error("duplicate coordinate name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Chart Chart::standard(std::size_t dimension) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= dimension; ++i) names.push_back("x" + std::to_string(i));
  return Chart(std::move(names));
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

Polynomial Chart::constant(const Rational& value) const {
  return Polynomial::constant(dimension(), value);
}

Polynomial Chart::coordinate(std::size_t index) const {
  return Polynomial::variable(dimension(), index);
}

void require_same_chart(const Chart& a, const Chart& b) {
  if (!(a == b)) throw ChartMismatch("objects live on different charts");
}

}  // namespace nlab

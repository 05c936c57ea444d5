#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlab/ring/polynomial.hpp"

namespace nlab {

/// A single global coordinate chart on R^n: n distinct coordinate names.
class Chart {
 public:
  explicit Chart(std::vector<std::string> names);
  /// Chart with coordinates x1..xn.
  static Chart standard(std::size_t dimension);

  std::size_t dimension() const { return names_->size(); }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Polynomial zero() const { return Polynomial(dimension()); }
  Polynomial constant(const Rational& value) const;
  Polynomial coordinate(std::size_t index) const;

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

void require_same_chart(const Chart& a, const Chart& b);

}  // namespace nlab

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace nlab {

/// Strictly increasing sequence of coordinate indices labelling a basis
/// element dx^I or d_I of an alternating tensor.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Throws IndexOutOfRange unless `indices` is strictly increasing.
  explicit MultiIndex(std::vector<std::size_t> indices);

  /// Sorts an arbitrary index sequence, returning the permutation sign and
  /// the sorted index, or std::nullopt when an index repeats.
  static std::optional<std::pair<int, MultiIndex>> normalize(std::vector<std::size_t> indices);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  bool contains(std::size_t index) const;
  /// The index with the entry at `position` removed.
  MultiIndex without_position(std::size_t position) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.indices_ <=> b.indices_;
  }

 private:
  std::vector<std::size_t> indices_;
};

/// All strictly increasing multi-indices of length k over [0, n), in lex order.
std::vector<MultiIndex> multi_indices(std::size_t n, std::size_t k);

/// Sign of the permutation sorting `indices` (which must be distinct).
int permutation_sign(std::vector<std::size_t> indices);

}  // namespace nlab

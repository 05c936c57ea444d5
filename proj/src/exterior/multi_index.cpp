#include "nlab/exterior/multi_index.hpp"

#include <algorithm>

#include "nlab/errors.hpp"

namespace nlab {

MultiIndex::MultiIndex(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i - 1] >= indices_[i]) throw IndexOutOfRange("multi-index not strictly increasing");
  }
}

std::optional<std::pair<int, MultiIndex>> MultiIndex::normalize(std::vector<std::size_t> indices) {
  int sign = 1;
  // Insertion sort; each adjacent swap flips the parity.
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return std::nullopt;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  MultiIndex out;
  out.indices_ = std::move(indices);
  return std::pair{sign, std::move(out)};
}

bool MultiIndex::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

MultiIndex MultiIndex::without_position(std::size_t position) const {
  MultiIndex out;
  out.indices_.reserve(indices_.size() - 1);
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i != position) out.indices_.push_back(indices_[i]);
  }
  return out;
}

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<MultiIndex>& out) {
  if (cur.size() == k) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices(std::size_t n, std::size_t k) {
  std::vector<MultiIndex> out;
  if (k > n) return out;
  std::vector<std::size_t> cur;
  combinations(n, k, 0, cur, out);
  return out;
}

int permutation_sign(std::vector<std::size_t> indices) {
  auto r = MultiIndex::normalize(std::move(indices));
  if (!r) throw IndexOutOfRange("permutation_sign of a sequence with repeats");
  return r->first;
}

}  // namespace nlab

#pragma once

#include <algorithm>
#include <vector>

#include "extdep/errors.hpp"

namespace extdep {

// Disjoint index blocks I_1..I_p covering {0..d-1}. Blocks may be arbitrary
// subsets; contiguity is never required.
class Partition {
 public:
  Partition(int d, std::vector<std::vector<int>> blocks) : d_(d), blocks_(std::move(blocks)) {
    if (d_ < 1) throw DomainError("partition dimension must be >= 1");
    if (blocks_.empty()) throw DomainError("partition needs at least one block");
    block_of_.assign(d_, -1);
    for (int j = 0; j < p(); ++j) {
      auto& b = blocks_[j];
      if (b.empty()) throw DomainError("partition blocks must be nonempty");
      std::sort(b.begin(), b.end());
      for (int i : b) {
        if (i < 0 || i >= d_) throw DimensionError("partition index out of range");
        if (block_of_[i] != -1) throw DomainError("partition blocks must be disjoint");
        block_of_[i] = j;
      }
    }
    for (int i = 0; i < d_; ++i)
      if (block_of_[i] == -1) throw DomainError("partition blocks must cover every index");
  }

  static Partition singletons(int d) {
    std::vector<std::vector<int>> blocks(d);
    for (int i = 0; i < d; ++i) blocks[i] = {i};
    return Partition(d, std::move(blocks));
  }

  // File/CLI surfaces carry 1-based indices.
  static Partition from_one_based(int d, const std::vector<std::vector<int>>& blocks) {
    std::vector<std::vector<int>> z(blocks.size());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      z[j].reserve(blocks[j].size());
      for (int i : blocks[j]) z[j].push_back(i - 1);
    }
    return Partition(d, std::move(z));
  }

  int dim() const { return d_; }
  int p() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int j) const { return blocks_.at(j); }
  int block_of(int i) const { return block_of_.at(i); }

  // Sorted union of two blocks.
  std::vector<int> block_union(int j, int jp) const {
    std::vector<int> u;
    u.reserve(block(j).size() + block(jp).size());
    std::merge(block(j).begin(), block(j).end(), block(jp).begin(), block(jp).end(),
               std::back_inserter(u));
    return u;
  }

 private:
  int d_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

}  // namespace extdep

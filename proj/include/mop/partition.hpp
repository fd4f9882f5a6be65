#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mop {

/// A set partition of {0, ..., n-1} with each block flagged free when it
/// contains no marked element.
///
/// Blocks are kept canonical: members sorted ascending, blocks ordered by
/// their smallest member. Two partitions are equal iff their encodings are.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `blocks` is a partition of
  /// {0, ..., marked.size()-1} into non-empty blocks.
  Partition(std::vector<std::vector<std::size_t>> blocks, const std::vector<bool>& marked);

  static Partition singletons(const std::vector<bool>& marked);

  std::size_t element_count() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  const std::vector<std::size_t>& block(std::size_t b) const { return blocks_[b]; }
  std::size_t block_of(std::size_t element) const { return block_of_[element]; }
  bool is_free(std::size_t b) const { return free_[b]; }
  const std::vector<bool>& free_flags() const { return free_; }
  std::size_t free_block_count() const;

  /// Restricted-growth labelling: entry p is the canonical block number of p.
  const std::vector<std::size_t>& encoding() const { return block_of_; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.block_of_ == b.block_of_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.block_of_ < b.block_of_;
  }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
  std::vector<bool> free_;
};

/// True iff every block of `finer` lies inside a block of `coarser`.
bool refines(const Partition& finer, const Partition& coarser);

}  // namespace mop

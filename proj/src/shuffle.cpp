#include "qshuffle/shuffle.hpp"

#include <numeric>

namespace qshuffle {

namespace {

/// Assigns the sorted free positions in `positions` to block `block` onward,
/// emitting one completed permutation per ordered set partition.
void assign_blocks(const std::vector<std::size_t>& block_lengths, std::size_t block,
                   std::vector<std::size_t>& free_positions, std::size_t source_offset,
                   ShufflePermutation& current, std::vector<ShufflePermutation>& out) {
  if (block == block_lengths.size()) {
    out.push_back(current);
    return;
  }
  std::size_t length = block_lengths[block];
  // Choose `length` of the free positions (combinations in lexicographic
  // order); block entries are filled in increasing position order.
  // chosen_idx holds indices into free_positions.
  std::vector<std::size_t> chosen_idx(length);
  auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == length) {
      std::vector<std::size_t> remaining;
      remaining.reserve(free_positions.size() - length);
      std::size_t mark = 0;
      for (std::size_t i = 0; i < free_positions.size(); ++i) {
        if (mark < length && chosen_idx[mark] == i) {
          ++mark;
        } else {
          remaining.push_back(free_positions[i]);
        }
      }
      for (std::size_t i = 0; i < length; ++i) {
        current.to[source_offset + i] = free_positions[chosen_idx[i]];
      }
      assign_blocks(block_lengths, block + 1, remaining, source_offset + length, current,
                    out);
      return;
    }
    for (std::size_t i = start; i + (length - depth) <= free_positions.size(); ++i) {
      chosen_idx[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  recurse(recurse, 0, 0);
}

}  // namespace

std::vector<ShufflePermutation> shuffle_permutations(
    const std::vector<std::size_t>& block_lengths) {
  if (block_lengths.empty())
    throw std::invalid_argument("shuffle needs at least one block");
  for (std::size_t l : block_lengths) {
    if (l == 0) throw std::invalid_argument("shuffle block lengths must be positive");
  }
  std::size_t n = std::accumulate(block_lengths.begin(), block_lengths.end(),
                                  static_cast<std::size_t>(0));
  std::vector<std::size_t> free_positions(n);
  std::iota(free_positions.begin(), free_positions.end(), 0);
  ShufflePermutation current;
  current.to.assign(n, 0);
  current.block_lengths = block_lengths;
  std::vector<ShufflePermutation> out;
  out.reserve(shuffle_count(block_lengths));
  assign_blocks(block_lengths, 0, free_positions, 0, current, out);
  return out;
}

std::uint64_t shuffle_count(const std::vector<std::size_t>& block_lengths) {
  constexpr std::uint64_t kSaturated = 1ull << 40;
  std::uint64_t result = 1;
  std::uint64_t placed = 0;
  for (std::size_t l : block_lengths) {
    for (std::uint64_t t = 1; t <= l; ++t) {
      ++placed;
      result = result * placed / t;
      if (result >= kSaturated) return kSaturated;  // beyond any sane term budget
    }
  }
  return result;
}

}  // namespace qshuffle

#ifndef PDQ_ADVERSARY_HPP
#define PDQ_ADVERSARY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdq/config.hpp"

namespace pdq {

// Builds a quicksort-killer permutation of 0..n-1 for this library's deterministic pivot rule.
//
// The sort is run once over item ids with an ordering that keeps undecided items "gas" (larger
// than everything decided) and freezes them to the next solid value only when a comparison
// forces it, preferring to keep the current pivot candidate gaseous. The values frozen during
// that run, read back in original positions, form the returned input; replaying it with the
// same configuration and a branch-cheap ordering iff `block_partition` reproduces the run.
std::vector<std::int64_t> adversary_input(std::size_t n, const SortConfig& config = {},
                                          bool block_partition = true);

}  // namespace pdq

#endif  // PDQ_ADVERSARY_HPP

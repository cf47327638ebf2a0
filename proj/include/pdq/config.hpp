#ifndef PDQ_CONFIG_HPP
#define PDQ_CONFIG_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdq {

// Offsets are stored as unsigned char, so a block can hold at most 255 of them.
inline constexpr std::size_t kMaxBlockSize = 255;

// Tunables and feature toggles for the sort driver. The defaults are the tested configuration.
struct SortConfig {
    // Partitions below this size are finished with insertion sort.
    std::size_t insertion_threshold = 24;

    // Partitions above this size use Tukey's ninther to select the pivot.
    std::size_t ninther_threshold = 128;

    // Number of lifted elements a partial insertion sort may perform before giving up.
    std::size_t partial_insertion_budget = 8;

    // Elements scanned per side and round by the block partition kernel.
    std::size_t block_size = 64;

    // A partition is bad if either side holds fewer than total >> bad_partition_shift elements.
    unsigned bad_partition_shift = 3;

    bool use_block_partition = true;
    bool use_partition_left = true;
    bool use_break_patterns = true;
    bool use_partial_insertion = true;

    // Throws std::invalid_argument describing the first violated invariant.
    void validate() const {
        if (insertion_threshold < 3)
            throw std::invalid_argument("insertion_threshold must be at least 3");
        if (ninther_threshold < insertion_threshold)
            throw std::invalid_argument("ninther_threshold must be >= insertion_threshold");
        if (block_size < 1 || block_size > kMaxBlockSize)
            throw std::invalid_argument("block_size must be in [1, " +
                                        std::to_string(kMaxBlockSize) + "]");
        if (bad_partition_shift < 1 || bad_partition_shift > 16)
            throw std::invalid_argument("bad_partition_shift must be in [1, 16]");
    }
};

// Per-call driver state, copied into every child call.
struct LoopContext {
    int bad_allowed = 0;
    bool leftmost = true;
    int depth = 0;
};

// floor(log2(n)) for n > 0, 0 otherwise.
constexpr int floor_log2(std::size_t n) noexcept {
    int log = 0;
    while (n >>= 1) ++log;
    return log;
}

constexpr int ceil_log2(std::size_t n) noexcept {
    return n <= 1 ? 0 : floor_log2(n - 1) + 1;
}

}  // namespace pdq

#endif  // PDQ_CONFIG_HPP

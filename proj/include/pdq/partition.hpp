#ifndef PDQ_PARTITION_HPP
#define PDQ_PARTITION_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <iterator>
#include <utility>

#include "pdq/config.hpp"
#include "pdq/metrics.hpp"
#include "pdq/small_sorts.hpp"

namespace pdq {

struct PartitionResult {
    // Final position of the pivot, relative to the start of the partitioned range.
    std::size_t pivot_index;
    // True iff the crossing pointers never had to exchange a pair. Always false for
    // partition_left.
    bool no_swaps;

    friend bool operator==(const PartitionResult&, const PartitionResult&) = default;
};

// Scratch space for the block kernel. One instance is owned by the sort driver and reused by
// every partition of that sort.
struct BlockBuffers {
    alignas(64) std::array<unsigned char, kMaxBlockSize + 1> offsets_left{};
    alignas(64) std::array<unsigned char, kMaxBlockSize + 1> offsets_right{};
    std::size_t pending_left = 0;
    std::size_t pending_right = 0;
};

// Partitions [begin, end) around the pivot *begin. Elements equal to the pivot go right.
//
// Requires end - begin >= 2 and some element after *begin that is not less than the pivot, which
// holds whenever the pivot is a median of at least three elements of the range. After the first
// exchange the exchanged elements act as sentinels, so only the very first right-to-left scan
// carries a bound check.
template <class It, class Compare, class Probe = NullProbe>
inline PartitionResult partition_right(It begin, It end, Compare comp, Probe&& probe = Probe{}) {
    using T = std::iter_value_t<It>;
    T pivot(std::move(*begin));
    It first = begin;
    It last = end;

    while (comp(*++first, pivot)) {}

    // No element before *first can stop the scan from the right if first is begin + 1.
    if (first - 1 == begin) {
        while (first < last && !comp(*--last, pivot)) {}
    } else {
        while (!comp(*--last, pivot)) {}
    }

    const bool no_swaps = first >= last;

    while (first < last) {
        detail::exchange(first, last, probe);
        while (comp(*++first, pivot)) {}
        while (!comp(*--last, pivot)) {}
    }

    It pivot_pos = first - 1;
    *begin = std::move(*pivot_pos);
    *pivot_pos = std::move(pivot);
    probe.on_moves(3);
    return {static_cast<std::size_t>(pivot_pos - begin), no_swaps};
}

// Partitions [begin, end) around the pivot *begin. Elements equal to the pivot go left.
//
// Used when the predecessor of the range compares equal to the pivot: then no element of the
// range is smaller than the pivot and the left side holds exactly the pivot's equivalence class.
template <class It, class Compare, class Probe = NullProbe>
inline PartitionResult partition_left(It begin, It end, Compare comp, Probe&& probe = Probe{}) {
    using T = std::iter_value_t<It>;
    T pivot(std::move(*begin));
    It first = begin;
    It last = end;

    while (comp(pivot, *--last)) {}

    if (last + 1 == end) {
        while (first < last && !comp(pivot, *++first)) {}
    } else {
        while (!comp(pivot, *++first)) {}
    }

    while (first < last) {
        detail::exchange(first, last, probe);
        while (comp(pivot, *--last)) {}
        while (!comp(pivot, *++first)) {}
    }

    It pivot_pos = last;
    *begin = std::move(*pivot_pos);
    *pivot_pos = std::move(pivot);
    probe.on_moves(3);
    return {static_cast<std::size_t>(pivot_pos - begin), false};
}

namespace detail {

// Exchanges the elements named by two offset lists pairwise. With unequal counts the pairs are
// rotated through one temporary (two moves per element); with equal counts plain swaps are used,
// which keeps descending input symmetric for the later swapless detection.
template <class It, class Probe>
inline void swap_offsets(It first, It last, const unsigned char* offsets_l,
                         const unsigned char* offsets_r, std::size_t num, bool use_swaps,
                         Probe& probe) {
    using T = std::iter_value_t<It>;
    if (use_swaps) {
        for (std::size_t i = 0; i < num; ++i) {
            exchange(first + offsets_l[i], last - offsets_r[i], probe);
        }
    } else if (num > 0) {
        It l = first + offsets_l[0];
        It r = last - offsets_r[0];
        T tmp(std::move(*l));
        *l = std::move(*r);
        for (std::size_t i = 1; i < num; ++i) {
            l = first + offsets_l[i];
            *r = std::move(*l);
            r = last - offsets_r[i];
            *l = std::move(*r);
        }
        *r = std::move(tmp);
        probe.on_moves(2 * num + 1);
    }
}

}  // namespace detail

// Block variant of partition_right with the same contract.
//
// Each round scans up to block_size elements from either end, storing the offsets of misplaced
// elements with predicate-incremented counters instead of branches, then exchanges
// min(pending_left, pending_right) pairs. Leftover offsets of the fuller side carry into the next
// round; only an empty side is refilled. The last fewer than 2 * block_size elements are split
// over reduced rounds.
template <class It, class Compare, class Probe = NullProbe>
inline PartitionResult block_partition_right(It begin, It end, Compare comp,
                                             BlockBuffers& buffers, std::size_t block_size,
                                             Probe&& probe = Probe{}) {
    using T = std::iter_value_t<It>;
    block_size = std::clamp<std::size_t>(block_size, 1, kMaxBlockSize);

    T pivot(std::move(*begin));
    It first = begin;
    It last = end;

    while (comp(*++first, pivot)) {}

    if (first - 1 == begin) {
        while (first < last && !comp(*--last, pivot)) {}
    } else {
        while (!comp(*--last, pivot)) {}
    }

    const bool no_swaps = first >= last;
    if (!no_swaps) {
        detail::exchange(first, last, probe);
        ++first;

        unsigned char* offsets_l = buffers.offsets_left.data();
        unsigned char* offsets_r = buffers.offsets_right.data();
        std::size_t& num_l = buffers.pending_left;
        std::size_t& num_r = buffers.pending_right;
        num_l = num_r = 0;
        std::size_t start_l = 0;
        std::size_t start_r = 0;
        It offsets_l_base = first;
        It offsets_r_base = last;

        while (first < last) {
            const auto num_unknown = static_cast<std::size_t>(last - first);
            const std::size_t left_split =
                num_l == 0 ? (num_r == 0 ? num_unknown / 2 : num_unknown) : 0;
            const std::size_t right_split = num_r == 0 ? (num_unknown - left_split) : 0;

            const std::size_t fill_l = std::min(left_split, block_size);
            for (std::size_t i = 0; i < fill_l; ++i) {
                offsets_l[num_l] = static_cast<unsigned char>(i);
                num_l += !comp(*first, pivot);
                ++first;
            }

            const std::size_t fill_r = std::min(right_split, block_size);
            for (std::size_t i = 0; i < fill_r;) {
                offsets_r[num_r] = static_cast<unsigned char>(++i);
                num_r += comp(*--last, pivot);
            }

            const std::size_t num = std::min(num_l, num_r);
            detail::swap_offsets(offsets_l_base, offsets_r_base, offsets_l + start_l,
                                 offsets_r + start_r, num, num_l == num_r, probe);
            num_l -= num;
            num_r -= num;
            start_l += num;
            start_r += num;

            if (num_l == 0) {
                start_l = 0;
                offsets_l_base = first;
            }
            if (num_r == 0) {
                start_r = 0;
                offsets_r_base = last;
            }
            PDQ_CONTRACT(num_l == 0 || num_r == 0);
        }

        // [first, last) is fully classified; drain the side that still has offsets.
        if (num_l) {
            const unsigned char* rest = offsets_l + start_l;
            while (num_l--) detail::exchange(offsets_l_base + rest[num_l], --last, probe);
            num_l = 0;
            first = last;
        }
        if (num_r) {
            const unsigned char* rest = offsets_r + start_r;
            while (num_r--) {
                detail::exchange(offsets_r_base - rest[num_r], first, probe);
                ++first;
            }
            num_r = 0;
            last = first;
        }
    }

    It pivot_pos = first - 1;
    *begin = std::move(*pivot_pos);
    *pivot_pos = std::move(pivot);
    probe.on_moves(3);
    return {static_cast<std::size_t>(pivot_pos - begin), no_swaps};
}

}  // namespace pdq

#endif  // PDQ_PARTITION_HPP

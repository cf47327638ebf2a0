#ifndef PDQ_PDQSORT_HPP
#define PDQ_PDQSORT_HPP

#include <cstddef>
#include <functional>
#include <iterator>
#include <ranges>
#include <utility>

#include "pdq/config.hpp"
#include "pdq/metrics.hpp"
#include "pdq/partition.hpp"
#include "pdq/small_sorts.hpp"

namespace pdq {

// Moves a pivot estimate to *begin: median of (middle, first, last) for small ranges, Tukey's
// ninther above config.ninther_threshold. On an already sorted range the candidates are left in
// order and only the final first/middle exchange disturbs it, so the following partition is
// swapless and puts the pivot back where it came from.
template <class It, class Compare, class Probe = NullProbe>
inline void choose_pivot(It begin, It end, Compare& comp, const SortConfig& config,
                         Probe&& probe = Probe{}) {
    const auto size = static_cast<std::size_t>(end - begin);
    const auto half = static_cast<std::ptrdiff_t>(size / 2);
    if (size > config.ninther_threshold) {
        sort3(begin, begin + half, end - 1, comp, probe);
        sort3(begin + 1, begin + (half - 1), end - 2, comp, probe);
        sort3(begin + 2, begin + (half + 1), end - 3, comp, probe);
        sort3(begin + (half - 1), begin + half, begin + (half + 1), comp, probe);
        detail::exchange(begin, begin + half, probe);
    } else {
        sort3(begin + half, begin, end - 1, comp, probe);
    }
}

constexpr bool is_bad_partition(std::size_t left_size, std::size_t right_size, std::size_t total,
                                const SortConfig& config) noexcept {
    const std::size_t cutoff = total >> config.bad_partition_shift;
    return left_size < cutoff || right_size < cutoff;
}

// Swaps the pivot candidates nearest both ends with the elements at the quartile positions
// len / 4 and len - 1 - len / 4, and for ranges that would use the ninther also the two
// neighbouring candidates on each side. For len >= 8 the exchanged pairs are disjoint, so the
// operation is its own inverse.
template <class It, class Probe = NullProbe>
inline void break_patterns(It begin, It end, const SortConfig& config, Probe&& probe = Probe{}) {
    const auto len = static_cast<std::size_t>(end - begin);
    if (len < 8) return;
    const auto q = static_cast<std::ptrdiff_t>(len / 4);
    It back = end - 1;
    detail::exchange(begin, begin + q, probe);
    detail::exchange(back, back - q, probe);
    if (len > config.ninther_threshold) {
        detail::exchange(begin + 1, begin + (q + 1), probe);
        detail::exchange(begin + 2, begin + (q + 2), probe);
        detail::exchange(back - 1, back - (q + 1), probe);
        detail::exchange(back - 2, back - (q + 2), probe);
    }
}

namespace detail {

// Fallback accounting. pdqsort spends its budget on bad partitions only; the introsort baseline
// spends it on every partition, which makes it a plain recursion depth limit.
enum class Budget { bad_partitions, depth };

template <Budget Policy, bool Block, class It, class Compare, class Probe>
void sort_loop(It begin, It end, Compare& comp, const SortConfig& config, LoopContext ctx,
               BlockBuffers& buffers, Probe& probe) {
    probe.on_enter(ctx.depth);
    const MoveBudget budget{config.partial_insertion_budget};

    while (true) {
        const auto size = static_cast<std::size_t>(end - begin);

        if (size < config.insertion_threshold) {
            if (ctx.leftmost) insertion_sort(begin, end, comp, probe);
            else unguarded_insertion_sort(begin, end, comp, probe);
            return;
        }

        if (ctx.bad_allowed <= 0) {
            probe.on_heapsort();
            heapsort(begin, end, comp, probe);
            return;
        }

        choose_pivot(begin, end, comp, config, probe);

        // The predecessor is the pivot of an ancestor and no element here is smaller than it.
        // If it is not smaller than our pivot they are equal, and partition_left isolates the
        // whole equivalence class, which needs no further sorting.
        if (config.use_partition_left && !ctx.leftmost && !comp(*(begin - 1), *begin)) {
            probe.on_pivot(*begin, PartitionKind::left);
            const PartitionResult part = partition_left(begin, end, comp, probe);
            begin += static_cast<std::ptrdiff_t>(part.pivot_index) + 1;
            continue;
        }

        probe.on_pivot(*begin, PartitionKind::right);
        PartitionResult part;
        if constexpr (Block) {
            part = block_partition_right(begin, end, comp, buffers, config.block_size, probe);
        } else {
            part = partition_right(begin, end, comp, probe);
        }

        const It pivot_pos = begin + static_cast<std::ptrdiff_t>(part.pivot_index);
        const std::size_t l_size = part.pivot_index;
        const std::size_t r_size = size - l_size - 1;
        const bool bad = is_bad_partition(l_size, r_size, size, config);

        if constexpr (Policy == Budget::depth) {
            --ctx.bad_allowed;
        } else if (bad) {
            probe.on_bad_partition();
            --ctx.bad_allowed;
        }

        if (bad) {
            if (config.use_break_patterns) {
                break_patterns(begin, pivot_pos, config, probe);
                break_patterns(pivot_pos + 1, end, config, probe);
            }
        } else if (part.no_swaps && config.use_partial_insertion) {
            bool ok = partial_insertion_sort(begin, pivot_pos, comp, budget, probe);
            probe.on_partial_insertion(ok);
            if (ok) {
                ok = partial_insertion_sort(pivot_pos + 1, end, comp, budget, probe);
                probe.on_partial_insertion(ok);
                if (ok) return;
            }
        }

        // Recurse into the smaller side and keep looping on the larger one, so the recursion
        // depth stays logarithmic. The right side always has the pivot as its predecessor.
        LoopContext child = ctx;
        child.depth = ctx.depth + 1;
        if (l_size < r_size) {
            sort_loop<Policy, Block>(begin, pivot_pos, comp, config, child, buffers, probe);
            begin = pivot_pos + 1;
            ctx.leftmost = false;
        } else {
            child.leftmost = false;
            sort_loop<Policy, Block>(pivot_pos + 1, end, comp, config, child, buffers, probe);
            end = pivot_pos;
        }
    }
}

template <Budget Policy, class It, class Compare, class Probe>
void run(It begin, It end, Compare comp, const SortConfig& config, Probe& probe) {
    const auto size = static_cast<std::size_t>(end - begin);
    if (size < 2) return;
    LoopContext ctx;
    ctx.bad_allowed = floor_log2(size);
    if constexpr (Policy == Budget::depth) ctx.bad_allowed *= 2;
    BlockBuffers buffers;
    if (config.use_block_partition && is_branch_cheap<Compare, std::iter_value_t<It>>::value) {
        sort_loop<Policy, true>(begin, end, comp, config, ctx, buffers, probe);
    } else {
        sort_loop<Policy, false>(begin, end, comp, config, ctx, buffers, probe);
    }
}

}  // namespace detail

template <class R>
concept SortableRange =
    std::ranges::random_access_range<R> && std::ranges::sized_range<R> &&
    std::permutable<std::ranges::iterator_t<R>>;

// Sorts with an explicit configuration and an event probe. The configuration is validated.
template <SortableRange R, class Compare, class Probe>
void sort_with_probe(R&& range, Compare comp, const SortConfig& config, Probe& probe) {
    config.validate();
    detail::run<detail::Budget::bad_partitions>(std::ranges::begin(range),
                                                std::ranges::end(range), std::move(comp),
                                                config, probe);
}

template <SortableRange R, class Compare>
void sort_with_config(R&& range, Compare comp, const SortConfig& config) {
    NullProbe probe;
    sort_with_probe(std::forward<R>(range), std::move(comp), config, probe);
}

template <SortableRange R, class Compare>
void sort_with(R&& range, Compare comp) {
    sort_with_config(std::forward<R>(range), std::move(comp), SortConfig{});
}

template <SortableRange R>
void sort(R&& range) {
    using T = std::ranges::range_value_t<R>;
    sort_with(std::forward<R>(range), std::less<T>{});
}

// Sorts and returns the counters of this run, including exact comparison counts.
template <SortableRange R, class Compare>
Metrics instrumented_sort(R&& range, Compare comp, const SortConfig& config = {}) {
    Metrics metrics;
    MetricsProbe probe(metrics);
    sort_with_probe(std::forward<R>(range), counting_ordering(std::move(comp), metrics.comparisons),
                    config, probe);
    return metrics;
}

// Introsort-style comparator used in benchmarks: the same quicksort core with equal-element
// handling, pattern breaking and the optimistic insertion sort disabled, and a fallback to
// heapsort after 2 * floor(log2 n) levels of partitioning regardless of partition quality.
template <SortableRange R, class Compare, class Probe>
void introsort_baseline_with_probe(R&& range, Compare comp, SortConfig config, Probe& probe) {
    config.use_partition_left = false;
    config.use_break_patterns = false;
    config.use_partial_insertion = false;
    config.validate();
    detail::run<detail::Budget::depth>(std::ranges::begin(range), std::ranges::end(range),
                                       std::move(comp), config, probe);
}

template <SortableRange R, class Compare>
void introsort_baseline(R&& range, Compare comp, const SortConfig& config = {}) {
    NullProbe probe;
    introsort_baseline_with_probe(std::forward<R>(range), std::move(comp), config, probe);
}

template <SortableRange R, class Compare>
Metrics instrumented_introsort_baseline(R&& range, Compare comp, const SortConfig& config = {}) {
    Metrics metrics;
    MetricsProbe probe(metrics);
    introsort_baseline_with_probe(std::forward<R>(range),
                                  counting_ordering(std::move(comp), metrics.comparisons), config,
                                  probe);
    return metrics;
}

}  // namespace pdq

#endif  // PDQ_PDQSORT_HPP

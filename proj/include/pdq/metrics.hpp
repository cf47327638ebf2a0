#ifndef PDQ_METRICS_HPP
#define PDQ_METRICS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>

namespace pdq {

enum class PartitionKind { right, left };

// Counters accumulated over one instrumented sort.
//
// `exchanges` counts pairwise swaps. `element_moves` counts single move assignments that are not
// part of a swap: insertion sort lifts/shifts/drops, heap sift holes, pivot placement and the
// cyclic two-move rotation of the block kernel.
struct Metrics {
    std::uint64_t comparisons = 0;
    std::uint64_t element_moves = 0;
    std::uint64_t exchanges = 0;
    std::uint64_t partition_right_calls = 0;
    std::uint64_t partition_left_calls = 0;
    std::uint64_t bad_partitions = 0;
    std::uint64_t heapsort_fallbacks = 0;
    std::uint64_t partial_insertion_attempts = 0;
    std::uint64_t partial_insertion_aborts = 0;
    std::uint64_t max_depth = 0;

    friend bool operator==(const Metrics&, const Metrics&) = default;

    // Column names matching to_csv_fragment(), comma separated.
    static std::string csv_header();
    std::string to_csv_fragment() const;
};

// Probe that compiles away. The driver and kernels report events to a probe so that the
// uninstrumented sort carries no bookkeeping at all.
struct NullProbe {
    static constexpr bool enabled = false;
    void on_moves(std::uint64_t) noexcept {}
    void on_exchanges(std::uint64_t) noexcept {}
    void on_enter(int) noexcept {}
    template <class T>
    void on_pivot(const T&, PartitionKind) noexcept {}
    void on_bad_partition() noexcept {}
    void on_heapsort() noexcept {}
    void on_partial_insertion(bool) noexcept {}
};

// Probe that fills a Metrics instance. Comparisons are counted by CountingOrdering, not here.
struct MetricsProbe {
    static constexpr bool enabled = true;
    Metrics* metrics;

    explicit MetricsProbe(Metrics& m) noexcept : metrics(&m) {}

    void on_moves(std::uint64_t n) noexcept { metrics->element_moves += n; }
    void on_exchanges(std::uint64_t n) noexcept { metrics->exchanges += n; }
    void on_enter(int depth) noexcept {
        metrics->max_depth = std::max<std::uint64_t>(metrics->max_depth, depth);
    }
    template <class T>
    void on_pivot(const T&, PartitionKind kind) noexcept {
        if (kind == PartitionKind::right) ++metrics->partition_right_calls;
        else ++metrics->partition_left_calls;
    }
    void on_bad_partition() noexcept { ++metrics->bad_partitions; }
    void on_heapsort() noexcept { ++metrics->heapsort_fallbacks; }
    void on_partial_insertion(bool ok) noexcept {
        ++metrics->partial_insertion_attempts;
        if (!ok) ++metrics->partial_insertion_aborts;
    }
};

// Block partitioning only pays off when the ordering compiles to branch-free code. This trait
// is true for the standard less/greater functors over arithmetic types; users may specialize it
// or wrap their relation with assert_branch_cheap().
template <class Compare, class T>
struct is_branch_cheap : std::false_type {};

template <class T>
struct is_branch_cheap<std::less<T>, T> : std::is_arithmetic<T> {};
template <class T>
struct is_branch_cheap<std::greater<T>, T> : std::is_arithmetic<T> {};
template <class T>
struct is_branch_cheap<std::less<>, T> : std::is_arithmetic<T> {};
template <class T>
struct is_branch_cheap<std::greater<>, T> : std::is_arithmetic<T> {};
template <class T>
struct is_branch_cheap<std::ranges::less, T> : std::is_arithmetic<T> {};
template <class T>
struct is_branch_cheap<std::ranges::greater, T> : std::is_arithmetic<T> {};

template <class Compare>
struct BranchCheap {
    Compare comp;

    template <class A, class B>
    bool operator()(A&& a, B&& b) const {
        return comp(std::forward<A>(a), std::forward<B>(b));
    }
};

template <class Compare, class T>
struct is_branch_cheap<BranchCheap<Compare>, T> : std::true_type {};

// Declares that `comp` is cheap and branch-free so block partitioning is used for it.
template <class Compare>
BranchCheap<Compare> assert_branch_cheap(Compare comp) {
    return BranchCheap<Compare>{std::move(comp)};
}

// Order-equivalent wrapper around `base` that counts every call. Copies share the counter.
template <class Compare>
struct CountingOrdering {
    Compare base;
    std::uint64_t* counter;

    template <class A, class B>
    bool operator()(A&& a, B&& b) const {
        ++*counter;
        return base(std::forward<A>(a), std::forward<B>(b));
    }
};

template <class Compare, class T>
struct is_branch_cheap<CountingOrdering<Compare>, T> : is_branch_cheap<Compare, T> {};

template <class Compare>
CountingOrdering<Compare> counting_ordering(Compare base, std::uint64_t& counter) {
    return CountingOrdering<Compare>{std::move(base), &counter};
}

}  // namespace pdq

#endif  // PDQ_METRICS_HPP

#ifndef PDQ_SMALL_SORTS_HPP
#define PDQ_SMALL_SORTS_HPP

#include <cstddef>
#include <iterator>
#include <utility>

#include "pdq/metrics.hpp"

#if defined(PDQ_DEBUG_CONTRACTS)
#include <cassert>
#define PDQ_CONTRACT(cond) assert(cond)
#else
#define PDQ_CONTRACT(cond) ((void)0)
#endif

namespace pdq {

// Upper bound on the number of corrections (lifted elements) a partial insertion sort may make.
struct MoveBudget {
    std::size_t limit = 8;
};

struct PartialInsertionOutcome {
    bool sorted;
    std::size_t corrections;
};

namespace detail {

template <class It, class Probe>
inline void exchange(It a, It b, Probe& probe) {
    using std::iter_swap;
    iter_swap(a, b);
    probe.on_exchanges(1);
}

// Shared lift/shift/drop step. `cur` is known to belong before `cur - 1`. Returns the final
// position of the lifted element.
template <bool Guarded, class It, class Compare, class Probe>
inline It lift_and_drop(It begin, It cur, Compare& comp, Probe& probe) {
    using T = std::iter_value_t<It>;
    T tmp = std::move(*cur);
    It sift = cur;
    It sift_1 = cur - 1;
    do {
        *sift-- = std::move(*sift_1);
    } while ((!Guarded || sift != begin) && comp(tmp, *--sift_1));
    *sift = std::move(tmp);
    probe.on_moves(static_cast<std::uint64_t>(cur - sift) + 2);
    return sift;
}

}  // namespace detail

// Sorts [begin, end) with insertion sort. Elements are relocated by hole-shifting.
template <class It, class Compare, class Probe = NullProbe>
inline void insertion_sort(It begin, It end, Compare comp, Probe&& probe = Probe{}) {
    if (begin == end) return;
    for (It cur = begin + 1; cur != end; ++cur) {
        // Compare first so an element already in place costs no moves.
        if (comp(*cur, *(cur - 1))) detail::lift_and_drop<true>(begin, cur, comp, probe);
    }
}

// Insertion sort without the lower bound check. Requires *(begin - 1) to exist and to compare
// less than or equal to every element of [begin, end).
template <class It, class Compare, class Probe = NullProbe>
inline void unguarded_insertion_sort(It begin, It end, Compare comp, Probe&& probe = Probe{}) {
    if (begin == end) return;
#if defined(PDQ_DEBUG_CONTRACTS)
    for (It it = begin; it != end; ++it) PDQ_CONTRACT(!comp(*it, *(begin - 1)));
#endif
    for (It cur = begin + 1; cur != end; ++cur) {
        if (comp(*cur, *(cur - 1))) detail::lift_and_drop<false>(begin, cur, comp, probe);
    }
}

// Insertion sort that gives up after more than budget.limit corrections. One correction is one
// lifted element, however far it travels. On abort the range is a permutation of the input with
// a sorted prefix.
template <class It, class Compare, class Probe = NullProbe>
inline PartialInsertionOutcome partial_insertion_sort_counted(It begin, It end, Compare comp,
                                                              MoveBudget budget,
                                                              Probe&& probe = Probe{}) {
    std::size_t corrections = 0;
    if (begin == end) return {true, 0};
    for (It cur = begin + 1; cur != end; ++cur) {
        if (comp(*cur, *(cur - 1))) {
            detail::lift_and_drop<true>(begin, cur, comp, probe);
            if (++corrections > budget.limit) return {false, corrections};
        }
    }
    return {true, corrections};
}

template <class It, class Compare, class Probe = NullProbe>
inline bool partial_insertion_sort(It begin, It end, Compare comp, MoveBudget budget,
                                   Probe&& probe = Probe{}) {
    return partial_insertion_sort_counted(begin, end, std::move(comp), budget, probe).sorted;
}

template <class It, class Compare, class Probe = NullProbe>
inline void sort2(It a, It b, Compare& comp, Probe&& probe = Probe{}) {
    if (comp(*b, *a)) detail::exchange(a, b, probe);
}

// Permutes *a, *b, *c into non-descending order with at most three comparisons.
template <class It, class Compare, class Probe = NullProbe>
inline void sort3(It a, It b, It c, Compare& comp, Probe&& probe = Probe{}) {
    sort2(a, b, comp, probe);
    sort2(b, c, comp, probe);
    sort2(a, b, comp, probe);
}

namespace detail {

// Moves the hole at `hole` down a max-heap of `len` elements rooted at `begin` until `value`
// fits, then drops `value` there.
template <class It, class Compare, class Probe>
inline void sift_down(It begin, std::ptrdiff_t hole, std::ptrdiff_t len,
                      std::iter_value_t<It> value, Compare& comp, Probe& probe) {
    std::uint64_t moves = 1;
    std::ptrdiff_t child = 2 * hole + 1;
    while (child < len) {
        if (child + 1 < len && comp(begin[child], begin[child + 1])) ++child;
        if (!comp(value, begin[child])) break;
        begin[hole] = std::move(begin[child]);
        ++moves;
        hole = child;
        child = 2 * hole + 1;
    }
    begin[hole] = std::move(value);
    probe.on_moves(moves);
}

}  // namespace detail

// In-place heapsort: bottom-up heap construction by repeated sift-down, then repeated extraction
// of the maximum.
template <class It, class Compare, class Probe = NullProbe>
inline void heapsort(It begin, It end, Compare comp, Probe&& probe = Probe{}) {
    const std::ptrdiff_t len = end - begin;
    if (len < 2) return;
    for (std::ptrdiff_t i = len / 2; i-- > 0;) {
        detail::sift_down(begin, i, len, std::move(begin[i]), comp, probe);
    }
    for (std::ptrdiff_t last = len - 1; last > 0; --last) {
        std::iter_value_t<It> top = std::move(begin[last]);
        begin[last] = std::move(begin[0]);
        probe.on_moves(2);
        detail::sift_down(begin, 0, last, std::move(top), comp, probe);
    }
}

}  // namespace pdq

#endif  // PDQ_SMALL_SORTS_HPP

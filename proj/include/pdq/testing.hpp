#ifndef PDQ_TESTING_HPP
#define PDQ_TESTING_HPP

// Verification helpers shared by the unit tests, the acceptance suite and the `verify` command.
// Nothing in here is used by the sort itself.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <iterator>
#include <map>
#include <stdexcept>
#include <vector>

#include "pdq/metrics.hpp"

namespace pdq::testing {

struct OutOfBoundsAccess : std::out_of_range {
    std::ptrdiff_t index;
    explicit OutOfBoundsAccess(std::ptrdiff_t i)
        : std::out_of_range("access outside the permitted window"), index(i) {}
};

// Random access iterator over a buffer that throws OutOfBoundsAccess instead of dereferencing a
// position outside [lo, hi). Iterator arithmetic itself is unchecked, only element access.
template <class T>
class CheckedIterator {
public:
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using reference = T&;
    using pointer = T*;
    using iterator_category = std::random_access_iterator_tag;
    using iterator_concept = std::random_access_iterator_tag;

    CheckedIterator() = default;
    CheckedIterator(T* base, std::ptrdiff_t pos, std::ptrdiff_t lo, std::ptrdiff_t hi)
        : base_(base), pos_(pos), lo_(lo), hi_(hi) {}

    T& operator*() const { return at(pos_); }
    T* operator->() const { return &at(pos_); }
    T& operator[](difference_type d) const { return at(pos_ + d); }

    CheckedIterator& operator++() { ++pos_; return *this; }
    CheckedIterator operator++(int) { auto t = *this; ++pos_; return t; }
    CheckedIterator& operator--() { --pos_; return *this; }
    CheckedIterator operator--(int) { auto t = *this; --pos_; return t; }
    CheckedIterator& operator+=(difference_type d) { pos_ += d; return *this; }
    CheckedIterator& operator-=(difference_type d) { pos_ -= d; return *this; }

    friend CheckedIterator operator+(CheckedIterator it, difference_type d) { return it += d; }
    friend CheckedIterator operator+(difference_type d, CheckedIterator it) { return it += d; }
    friend CheckedIterator operator-(CheckedIterator it, difference_type d) { return it -= d; }
    friend difference_type operator-(const CheckedIterator& a, const CheckedIterator& b) {
        return a.pos_ - b.pos_;
    }
    friend bool operator==(const CheckedIterator& a, const CheckedIterator& b) {
        return a.pos_ == b.pos_;
    }
    friend std::strong_ordering operator<=>(const CheckedIterator& a, const CheckedIterator& b) {
        return a.pos_ <=> b.pos_;
    }

    std::ptrdiff_t position() const { return pos_; }

private:
    T& at(std::ptrdiff_t i) const {
        if (i < lo_ || i >= hi_) throw OutOfBoundsAccess(i);
        return base_[i];
    }

    T* base_ = nullptr;
    std::ptrdiff_t pos_ = 0;
    std::ptrdiff_t lo_ = 0;
    std::ptrdiff_t hi_ = 0;
};

// Checked iterators for the subrange [first, last) of `buffer`, with element access permitted on
// [lo, last). Pass lo = first - 1 to allow reading the predecessor.
template <class T>
std::pair<CheckedIterator<T>, CheckedIterator<T>> checked_range(std::vector<T>& buffer,
                                                                std::ptrdiff_t first,
                                                                std::ptrdiff_t last,
                                                                std::ptrdiff_t lo) {
    return {CheckedIterator<T>(buffer.data(), first, lo, last),
            CheckedIterator<T>(buffer.data(), last, lo, last)};
}

// Metrics probe that also records how often each value class was chosen as a pivot.
template <class T, class Compare>
struct PivotTraceProbe : MetricsProbe {
    std::map<T, int, Compare> times_chosen;

    PivotTraceProbe(Metrics& m, Compare comp) : MetricsProbe(m), times_chosen(comp) {}

    template <class U>
    void on_pivot(const U& pivot, PartitionKind kind) {
        MetricsProbe::on_pivot(pivot, kind);
        ++times_chosen[pivot];
    }

    int max_reuse() const {
        int worst = 0;
        for (const auto& [value, times] : times_chosen) worst = std::max(worst, times);
        return worst;
    }
};

// Oracle: sorted copy via the standard library.
template <class T, class Compare = std::less<T>>
std::vector<T> oracle_sorted(std::vector<T> v, Compare comp = {}) {
    std::stable_sort(v.begin(), v.end(), comp);
    return v;
}

// True iff `out` is sorted and a permutation of `in` (equivalence under `comp`).
template <class T, class Compare = std::less<T>>
bool sorted_permutation_of(const std::vector<T>& in, const std::vector<T>& out,
                           Compare comp = {}) {
    if (in.size() != out.size()) return false;
    if (!std::is_sorted(out.begin(), out.end(), comp)) return false;
    return std::is_permutation(in.begin(), in.end(), out.begin(), out.end(),
                               [&](const T& a, const T& b) { return !comp(a, b) && !comp(b, a); });
}

}  // namespace pdq::testing

#endif  // PDQ_TESTING_HPP

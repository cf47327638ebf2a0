#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "pdq/datagen.hpp"
#include "pdq/partition.hpp"
#include "pdq/pdqsort.hpp"

using pdq::Metrics;
using pdq::MetricsProbe;
using Values = std::vector<int>;

namespace {

Values sorted_slice(const Values& v, std::size_t from, std::size_t to) {
    Values out(v.begin() + static_cast<std::ptrdiff_t>(from),
               v.begin() + static_cast<std::ptrdiff_t>(to));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("partition_right examples") {
    auto less = std::less<int>{};

    Values a{1, 0, 2};
    auto r = pdq::partition_right(a.begin(), a.end(), less);
    CHECK(r.pivot_index == 1);
    CHECK(a == Values{0, 1, 2});

    Values b{5, 1, 2, 7, 9};
    r = pdq::partition_right(b.begin(), b.end(), less);
    CHECK(r.pivot_index == 2);
    CHECK(r.no_swaps);
    CHECK(b == Values{2, 1, 5, 7, 9});

    Values c{3, 1, 4, 1, 5};
    r = pdq::partition_right(c.begin(), c.end(), less);
    CHECK(r.pivot_index == 2);
    CHECK(c[2] == 3);
    CHECK(sorted_slice(c, 0, 2) == Values{1, 1});
    CHECK(sorted_slice(c, 3, 5) == Values{4, 5});
}

TEST_CASE("partition_left examples") {
    auto less = std::less<int>{};

    Values a{2, 2, 3};
    auto r = pdq::partition_left(a.begin(), a.end(), less);
    CHECK(r.pivot_index == 1);
    CHECK(a == Values{2, 2, 3});

    Values b{4, 4, 4, 4};
    r = pdq::partition_left(b.begin(), b.end(), less);
    CHECK(r.pivot_index == 3);

    Values c{5, 7, 5, 6, 5};
    r = pdq::partition_left(c.begin(), c.end(), less);
    CHECK(r.pivot_index == 2);
    CHECK(sorted_slice(c, 0, 3) == Values{5, 5, 5});
    CHECK(sorted_slice(c, 3, 5) == Values{6, 7});
}

TEST_CASE("block_partition_right small example") {
    Values a{1, 0, 2};
    pdq::BlockBuffers buffers;
    const auto r = pdq::block_partition_right(a.begin(), a.end(), std::less<int>{}, buffers, 64);
    CHECK(r.pivot_index == 1);
    CHECK(a == Values{0, 1, 2});
}

TEST_CASE("block and scalar kernels agree on a seeded 300-element array") {
    Values input(300);
    std::iota(input.begin(), input.end(), 0);
    pdq::datagen::SplitMix64 rng(7);
    for (std::size_t i = input.size() - 1; i > 0; --i) std::swap(input[i], input[rng.below(i + 1)]);
    std::uint64_t selection = 0;
    auto counted_select = pdq::counting_ordering(std::less<int>{}, selection);
    pdq::choose_pivot(input.begin(), input.end(), counted_select, pdq::SortConfig{});
    const int pivot = input[0];

    for (std::size_t bs : {std::size_t{64}, std::size_t{7}, std::size_t{255}}) {
        CAPTURE(bs);
        Values scalar = input;
        Metrics sm;
        MetricsProbe sp(sm);
        const auto sr = pdq::partition_right(
            scalar.begin(), scalar.end(), pdq::counting_ordering(std::less<int>{}, sm.comparisons),
            sp);

        Values block = input;
        Metrics bm;
        MetricsProbe bp(bm);
        pdq::BlockBuffers buffers;
        const auto br = pdq::block_partition_right(
            block.begin(), block.end(), pdq::counting_ordering(std::less<int>{}, bm.comparisons),
            buffers, bs, bp);

        CHECK(sr.pivot_index == br.pivot_index);
        CHECK(block[br.pivot_index] == pivot);
        CHECK(sorted_slice(scalar, 0, sr.pivot_index) == sorted_slice(block, 0, br.pivot_index));
        CHECK(sorted_slice(scalar, sr.pivot_index + 1, 300) ==
              sorted_slice(block, br.pivot_index + 1, 300));
        for (std::size_t i = 0; i < br.pivot_index; ++i) CHECK(block[i] < pivot);
        for (std::size_t i = br.pivot_index + 1; i < 300; ++i) CHECK(block[i] >= pivot);
        // One scan comparison per non-pivot element, plus a few at the pointer crossing.
        CHECK(sm.comparisons >= 299);
        CHECK(sm.comparisons <= 299 + 4);
        CHECK(bm.comparisons >= 299);
        CHECK(bm.comparisons <= 299 + 4);
    }
}

TEST_CASE("no_swaps implies a second partition does no exchanges") {
    Values v{4, 1, 3, 2, 0, 8, 6, 9, 7, 5};
    auto r = pdq::partition_right(v.begin(), v.end(), std::less<int>{});
    CHECK(r.no_swaps);
    // Put the pivot back in front and re-run: still no exchanges.
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r.pivot_index),
                v.begin() + static_cast<std::ptrdiff_t>(r.pivot_index) + 1);
    Metrics m;
    MetricsProbe probe(m);
    r = pdq::partition_right(v.begin(), v.end(), std::less<int>{}, probe);
    CHECK(r.no_swaps);
    CHECK(m.exchanges == 0);
}

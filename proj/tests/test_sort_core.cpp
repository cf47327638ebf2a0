#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pdq/adversary.hpp"
#include "pdq/datagen.hpp"
#include "pdq/pdqsort.hpp"
#include "pdq/testing.hpp"

using pdq::SortConfig;
using Values = std::vector<std::int64_t>;

namespace {

Values shuffled(std::size_t n, std::uint64_t seed) {
    return pdq::datagen::generate_values(pdq::datagen::DistributionSpec::make(
        pdq::datagen::Kind::uniform, n, pdq::datagen::ElementType::int64, seed));
}

}  // namespace

TEST_CASE("choose_pivot median of three") {
    auto less = std::less<int>{};
    std::vector<int> a{1, 2, 3};
    pdq::choose_pivot(a.begin(), a.end(), less, SortConfig{});
    CHECK(a == std::vector<int>{2, 1, 3});

    std::vector<int> b{3, 3, 3};
    pdq::choose_pivot(b.begin(), b.end(), less, SortConfig{});
    CHECK(b[0] == 3);
}

TEST_CASE("choose_pivot ninther on ascending input is restorable") {
    std::vector<int> v(200);
    std::iota(v.begin(), v.end(), 0);
    auto less = std::less<int>{};
    pdq::choose_pivot(v.begin(), v.end(), less, SortConfig{});
    CHECK(v[0] == 100);
    // Putting the ninther back at the middle restores the input.
    std::iter_swap(v.begin(), v.begin() + 100);
    CHECK(std::is_sorted(v.begin(), v.end()));
}

TEST_CASE("is_bad_partition") {
    const SortConfig c;
    CHECK(pdq::is_bad_partition(7, 56, 64, c));
    CHECK_FALSE(pdq::is_bad_partition(8, 55, 64, c));
    CHECK_FALSE(pdq::is_bad_partition(32, 31, 64, c));
    CHECK(pdq::is_bad_partition(56, 7, 64, c));
}

TEST_CASE("break_patterns") {
    std::vector<int> v(16);
    std::iota(v.begin(), v.end(), 0);
    const auto original = v;
    pdq::break_patterns(v.begin(), v.end(), SortConfig{});
    CHECK(v[0] == 4);
    CHECK(v[15] == 11);
    CHECK(std::is_permutation(v.begin(), v.end(), original.begin()));
    pdq::break_patterns(v.begin(), v.end(), SortConfig{});
    CHECK(v == original);

    std::vector<int> big(300);
    std::iota(big.begin(), big.end(), 0);
    const auto big_original = big;
    pdq::break_patterns(big.begin(), big.end(), SortConfig{});
    CHECK(big[1] == 76);
    CHECK(big[297] == 222);
    pdq::break_patterns(big.begin(), big.end(), SortConfig{});
    CHECK(big == big_original);

    std::vector<int> tiny{3, 2, 1};
    pdq::break_patterns(tiny.begin(), tiny.end(), SortConfig{});
    CHECK(tiny == std::vector<int>{3, 2, 1});
}

TEST_CASE("trivial sorts") {
    Values empty;
    pdq::sort(empty);
    CHECK(empty.empty());
    Values one{7};
    pdq::sort(one);
    CHECK(one == Values{7});
    Values three{3, 1, 2};
    pdq::sort(three);
    CHECK(three == Values{1, 2, 3});
}

TEST_CASE("ascending 2^20 stays within 6n comparisons") {
    const std::size_t n = std::size_t{1} << 20;
    Values v(n);
    std::iota(v.begin(), v.end(), 0);
    const auto m = pdq::instrumented_sort(v, std::less<std::int64_t>{});
    CHECK(std::is_sorted(v.begin(), v.end()));
    CHECK(m.comparisons <= 6 * n);
    CHECK(m.heapsort_fallbacks == 0);
}

TEST_CASE("all-equal input is linear and uses partition_left") {
    for (bool block : {false, true}) {
        const std::size_t n = 100000;
        Values v(n, 1);
        SortConfig c;
        c.use_block_partition = block;
        const auto m = pdq::instrumented_sort(v, std::less<std::int64_t>{}, c);
        CHECK(m.comparisons <= 8 * n);
        // The first partition is leftmost, then partition_left sweeps the single equal run.
        CHECK(m.partition_left_calls == 1);
        CHECK(m.partition_right_calls == 1);
    }
}

TEST_CASE("every toggle combination sorts correctly") {
    const Values input = shuffled(5000, 3);
    const Values expected = pdq::testing::oracle_sorted(input);
    for (unsigned mask = 0; mask < 16; ++mask) {
        SortConfig c;
        c.use_block_partition = mask & 1u;
        c.use_partition_left = mask & 2u;
        c.use_break_patterns = mask & 4u;
        c.use_partial_insertion = mask & 8u;
        Values v = input;
        pdq::sort_with_config(v, std::less<std::int64_t>{}, c);
        CHECK(v == expected);

        Values w = input;
        for (auto& x : w) x %= 8;
        const Values w_expected = pdq::testing::oracle_sorted(w);
        pdq::sort_with_config(w, std::less<std::int64_t>{}, c);
        CHECK(w == w_expected);
    }
}

TEST_CASE("unusual tunables still sort") {
    const Values input = shuffled(3000, 11);
    const Values expected = pdq::testing::oracle_sorted(input);
    SortConfig c;
    c.insertion_threshold = 3;
    c.ninther_threshold = 3;
    c.block_size = 1;
    c.partial_insertion_budget = 0;
    c.bad_partition_shift = 1;
    Values v = input;
    pdq::sort_with_config(v, std::less<std::int64_t>{}, c);
    CHECK(v == expected);
}

TEST_CASE("descending comparator and strings") {
    Values v = shuffled(2000, 5);
    pdq::sort_with(v, std::greater<std::int64_t>{});
    CHECK(std::is_sorted(v.begin(), v.end(), std::greater<std::int64_t>{}));

    auto s = pdq::datagen::generate_strings(pdq::datagen::DistributionSpec::make(
        pdq::datagen::Kind::dupsq, 3000, pdq::datagen::ElementType::str, 9));
    const auto expected = pdq::testing::oracle_sorted(s);
    pdq::sort(s);
    CHECK(s == expected);
}

TEST_CASE("instrumented sort is deterministic") {
    const Values input = shuffled(20000, 17);
    Values a = input;
    Values b = input;
    CHECK(pdq::instrumented_sort(a, std::less<std::int64_t>{}) ==
          pdq::instrumented_sort(b, std::less<std::int64_t>{}));
    CHECK(a == b);
}

TEST_CASE("configuration validation") {
    Values v{2, 1};
    SortConfig c;
    c.insertion_threshold = 2;
    CHECK_THROWS_AS(pdq::sort_with_config(v, std::less<std::int64_t>{}, c), std::invalid_argument);
    c = SortConfig{};
    c.ninther_threshold = 10;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = SortConfig{};
    c.block_size = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.block_size = 256;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = SortConfig{};
    c.bad_partition_shift = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    CHECK_NOTHROW(SortConfig{}.validate());
}

TEST_CASE("introsort baseline") {
    Values small{3, 1, 2};
    pdq::introsort_baseline(small, std::less<std::int64_t>{});
    CHECK(small == Values{1, 2, 3});

    Values v = shuffled(10000, 23);
    const Values expected = pdq::testing::oracle_sorted(v);
    pdq::introsort_baseline(v, std::less<std::int64_t>{});
    CHECK(v == expected);

    const std::size_t n = std::size_t{1} << 14;
    SortConfig killer_config;
    killer_config.use_partition_left = false;
    killer_config.use_break_patterns = false;
    killer_config.use_partial_insertion = false;
    Values killer = pdq::adversary_input(n, killer_config);
    const auto m = pdq::instrumented_introsort_baseline(killer, std::less<std::int64_t>{});
    CHECK(std::is_sorted(killer.begin(), killer.end()));
    CHECK(killer.front() == 0);
    CHECK(killer.back() == static_cast<std::int64_t>(n - 1));
    CHECK(m.partial_insertion_attempts == 0);
    CHECK(m.partition_left_calls == 0);
}

TEST_CASE("floor and ceil log2") {
    CHECK(pdq::floor_log2(1) == 0);
    CHECK(pdq::floor_log2(2) == 1);
    CHECK(pdq::floor_log2(1023) == 9);
    CHECK(pdq::floor_log2(1024) == 10);
    CHECK(pdq::ceil_log2(1) == 0);
    CHECK(pdq::ceil_log2(1023) == 10);
    CHECK(pdq::ceil_log2(1024) == 10);
    CHECK(pdq::ceil_log2(1025) == 11);
}

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pdq/bench.hpp"

using namespace pdq::bench;
using pdq::datagen::DistributionSpec;
using pdq::datagen::ElementType;
using pdq::datagen::Kind;

namespace {

std::string without_timing(const std::string& row) {
    std::string out = row;
    for (std::size_t i = 0; i < kTimingColumns; ++i) out.erase(out.rfind(','));
    return out;
}

}  // namespace

TEST_CASE("golden CSV header") {
    CHECK(csv_header() ==
          "algo,kind,element_type,n,input_hash,comparisons,element_moves,exchanges,"
          "partition_right_calls,partition_left_calls,bad_partitions,heapsort_fallbacks,"
          "partial_insertion_attempts,partial_insertion_aborts,max_depth,iterations,total_ns,"
          "ns_per_nlog2n");
}

TEST_CASE("policy floor") {
    const Algo algos[] = {Algo::pdq};
    const DistributionSpec specs[] = {
        DistributionSpec::make(Kind::asc, 1 << 16, ElementType::int64, 1)};
    Policy policy;
    policy.min_time = std::chrono::milliseconds(100);
    policy.min_iterations = 3;
    const auto records = run_benchmark(algos, specs, policy);
    REQUIRE(records.size() == 1);
    CHECK(records[0].iterations >= 3);
    CHECK(records[0].total_ns >= 100'000'000);
    CHECK(records[0].n == (1 << 16));
}

TEST_CASE("counter columns are deterministic") {
    const Algo algos[] = {Algo::pdq, Algo::bpdq, Algo::introsort_baseline, Algo::heapsort};
    const DistributionSpec specs[] = {
        DistributionSpec::make(Kind::mod8, 3000, ElementType::int64, 1),
        DistributionSpec::make(Kind::uniform, 3000, ElementType::str, 1)};
    Policy policy;
    policy.min_time = std::chrono::nanoseconds(0);
    policy.min_iterations = 1;
    const auto a = run_benchmark(algos, specs, policy);
    const auto b = run_benchmark(algos, specs, policy);
    REQUIRE(a.size() == 8);
    REQUIRE(b.size() == 8);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(without_timing(to_csv_row(a[i])) == without_timing(to_csv_row(b[i])));
}

TEST_CASE("pdq beats the baseline on all-equal input") {
    const Algo algos[] = {Algo::pdq, Algo::introsort_baseline};
    const DistributionSpec specs[] = {
        DistributionSpec::make(Kind::ones, 1 << 18, ElementType::int64, 1)};
    Policy policy;
    policy.min_time = std::chrono::nanoseconds(0);
    policy.min_iterations = 1;
    const auto records = run_benchmark(algos, specs, policy);
    REQUIRE(records.size() == 2);
    CHECK(records[0].algo == Algo::pdq);
    CHECK(records[0].metrics.comparisons < records[1].metrics.comparisons);
    CHECK(records[0].input_hash == records[1].input_hash);
}

TEST_CASE("algo names") {
    CHECK(parse_algo("pdq") == Algo::pdq);
    CHECK(parse_algo("bpdq") == Algo::bpdq);
    CHECK(parse_algo("baseline") == Algo::introsort_baseline);
    CHECK(parse_algo(to_string(Algo::introsort_baseline)) == Algo::introsort_baseline);
    CHECK(parse_algo("heapsort") == Algo::heapsort);
    CHECK_FALSE(parse_algo("timsort").has_value());
}

TEST_CASE("slowdown") {
    CHECK(slowdown(0.5) == 1.0);
    CHECK(slowdown(0.2) == doctest::Approx(1.386).epsilon(0.002));
    const double h = 0.375 + 0.875 * std::log2(8.0 / 7.0);
    CHECK(slowdown(0.125) == doctest::Approx(1.0 / h));
    CHECK(slowdown(0.125) == doctest::Approx(1.84).epsilon(0.002));
    for (double p : {0.01, 0.1, 0.3, 0.45})
        CHECK(slowdown(p) == doctest::Approx(slowdown(1.0 - p)).epsilon(1e-12));
    CHECK_THROWS_AS(slowdown(0.0), std::invalid_argument);
    CHECK_THROWS_AS(slowdown(1.0), std::invalid_argument);
    CHECK_THROWS_AS(binary_entropy(-0.1), std::invalid_argument);

    const double ps[] = {0.5, 0.2};
    const auto table = slowdown_table(ps);
    REQUIRE(table.size() == 2);
    CHECK(table[0].second == 1.0);
}

TEST_CASE("text tables mention every algorithm") {
    const Algo algos[] = {Algo::pdq, Algo::heapsort};
    const DistributionSpec specs[] = {
        DistributionSpec::make(Kind::desc, 1000, ElementType::int64, 1)};
    Policy policy;
    policy.min_time = std::chrono::nanoseconds(0);
    policy.min_iterations = 1;
    const auto records = run_benchmark(algos, specs, policy);
    std::ostringstream out;
    write_text_tables(out, records);
    CHECK(out.str().find("pdq") != std::string::npos);
    CHECK(out.str().find("heapsort") != std::string::npos);
}

#ifndef PDQ_BENCH_HPP
#define PDQ_BENCH_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdq/datagen.hpp"
#include "pdq/metrics.hpp"

namespace pdq::bench {

enum class Algo { pdq, bpdq, introsort_baseline, heapsort };

std::string_view to_string(Algo algo);
// Accepts the canonical names plus "baseline" for introsort_baseline.
std::optional<Algo> parse_algo(std::string_view name);

struct Policy {
    std::chrono::nanoseconds min_time = std::chrono::seconds(1);
    std::size_t min_iterations = 10;
};

struct BenchmarkRecord {
    Algo algo = Algo::pdq;
    datagen::Kind kind = datagen::Kind::uniform;
    datagen::ElementType element_type = datagen::ElementType::int64;
    std::size_t n = 0;
    std::uint64_t input_hash = 0;
    Metrics metrics;
    std::size_t iterations = 0;
    std::uint64_t total_ns = 0;
    double ns_per_nlog2n = 0.0;
};

// Runs every algorithm on every spec, one cell at a time. Counter columns come from one
// instrumented run on the cell input; timing comes from repeated uninstrumented runs on
// identical copies of it until both policy floors are met.
std::vector<BenchmarkRecord> run_benchmark(std::span<const Algo> algos,
                                           std::span<const datagen::DistributionSpec> specs,
                                           const Policy& policy,
                                           std::ostream* progress = nullptr);

// Sorts `data` once with `algo` and returns its counters. `data` ends up sorted.
Metrics instrumented_run(Algo algo, datagen::Dataset& data);

// Fixed column order. The last three columns (iterations, total_ns, ns_per_nlog2n) depend on
// timing; all others are deterministic functions of the inputs.
std::string csv_header();
std::string to_csv_row(const BenchmarkRecord& record);
void write_csv(std::ostream& out, std::span<const BenchmarkRecord> records);
inline constexpr std::size_t kTimingColumns = 3;

// Aligned ns / (n log2 n) table, one block per (distribution, element type).
void write_text_tables(std::ostream& out, std::span<const BenchmarkRecord> records);

// Shannon's binary entropy in bits. Throws std::invalid_argument unless 0 < p < 1.
double binary_entropy(double p);

// Asymptotic cost of always splitting p : 1 - p relative to perfect halving, 1 / H(p).
double slowdown(double p);

std::vector<std::pair<double, double>> slowdown_table(std::span<const double> ps);

}  // namespace pdq::bench

#endif  // PDQ_BENCH_HPP

#include "pdq/bench.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "pdq/pdqsort.hpp"
#include "pdq/small_sorts.hpp"

namespace pdq::bench {
namespace {

SortConfig scalar_config() {
    SortConfig config;
    config.use_block_partition = false;
    return config;
}

template <class T, class Probe, class Wrap>
void sort_as(Algo algo, std::vector<T>& data, Probe& probe, Wrap wrap) {
    switch (algo) {
        case Algo::pdq:
            sort_with_probe(data, wrap(std::less<T>{}), scalar_config(), probe);
            break;
        case Algo::bpdq:
            sort_with_probe(data, wrap(assert_branch_cheap(std::less<T>{})), SortConfig{}, probe);
            break;
        case Algo::introsort_baseline:
            introsort_baseline_with_probe(data, wrap(std::less<T>{}), scalar_config(), probe);
            break;
        case Algo::heapsort:
            pdq::heapsort(data.begin(), data.end(), wrap(std::less<T>{}), probe);
            break;
    }
}

struct Identity {
    template <class C>
    C operator()(C comp) const { return comp; }
};

template <class T>
std::uint64_t timed_run(Algo algo, std::vector<T>& data) {
    NullProbe probe;
    const auto start = std::chrono::steady_clock::now();
    sort_as(algo, data, probe, Identity{});
    const auto stop = std::chrono::steady_clock::now();
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

}  // namespace

std::string_view to_string(Algo algo) {
    switch (algo) {
        case Algo::pdq: return "pdq";
        case Algo::bpdq: return "bpdq";
        case Algo::introsort_baseline: return "introsort_baseline";
        case Algo::heapsort: return "heapsort";
    }
    return "?";
}

std::optional<Algo> parse_algo(std::string_view name) {
    if (name == "pdq") return Algo::pdq;
    if (name == "bpdq") return Algo::bpdq;
    if (name == "baseline" || name == "introsort_baseline") return Algo::introsort_baseline;
    if (name == "heapsort") return Algo::heapsort;
    return std::nullopt;
}

Metrics instrumented_run(Algo algo, datagen::Dataset& data) {
    Metrics metrics;
    MetricsProbe probe(metrics);
    auto wrap = [&metrics](auto comp) { return counting_ordering(comp, metrics.comparisons); };
    std::visit([&](auto& values) { sort_as(algo, values, probe, wrap); }, data);
    return metrics;
}

std::vector<BenchmarkRecord> run_benchmark(std::span<const Algo> algos,
                                           std::span<const datagen::DistributionSpec> specs,
                                           const Policy& policy, std::ostream* progress) {
    std::vector<BenchmarkRecord> records;
    for (const datagen::DistributionSpec& spec : specs) {
        const datagen::Dataset pristine = datagen::generate(spec);
        const std::uint64_t input_hash = datagen::hash_dataset(pristine);

        for (Algo algo : algos) {
            BenchmarkRecord rec;
            rec.algo = algo;
            rec.kind = spec.kind;
            rec.element_type = spec.element_type;
            rec.n = spec.n;
            rec.input_hash = input_hash;

            datagen::Dataset work = pristine;
            rec.metrics = instrumented_run(algo, work);

            std::uint64_t total = 0;
            std::size_t iterations = 0;
            const auto min_ns = static_cast<std::uint64_t>(policy.min_time.count());
            while (iterations < policy.min_iterations || total < min_ns) {
                work = pristine;
                total += std::visit([algo](auto& values) { return timed_run(algo, values); },
                                    work);
                ++iterations;
            }
            rec.iterations = iterations;
            rec.total_ns = total;
            const double n = static_cast<double>(spec.n);
            const double norm = spec.n >= 2 ? n * std::log2(n) : 0.0;
            rec.ns_per_nlog2n = norm > 0 ? static_cast<double>(total) /
                                               (static_cast<double>(iterations) * norm)
                                         : 0.0;
            if (progress) {
                *progress << to_string(algo) << ' ' << datagen::to_string(spec.kind) << ' '
                          << datagen::to_string(spec.element_type) << ' ' << spec.n << ": "
                          << rec.ns_per_nlog2n << " ns/(n log2 n)\n";
            }
            records.push_back(rec);
        }
    }
    return records;
}

std::string csv_header() {
    return "algo,kind,element_type,n,input_hash," + Metrics::csv_header() +
           ",iterations,total_ns,ns_per_nlog2n";
}

std::string to_csv_row(const BenchmarkRecord& r) {
    std::ostringstream out;
    out << to_string(r.algo) << ',' << datagen::to_string(r.kind) << ','
        << datagen::to_string(r.element_type) << ',' << r.n << ',' << r.input_hash << ','
        << r.metrics.to_csv_fragment() << ',' << r.iterations << ',' << r.total_ns << ','
        << std::setprecision(6) << r.ns_per_nlog2n;
    return out.str();
}

void write_csv(std::ostream& out, std::span<const BenchmarkRecord> records) {
    out << csv_header() << '\n';
    for (const BenchmarkRecord& r : records) out << to_csv_row(r) << '\n';
}

void write_text_tables(std::ostream& out, std::span<const BenchmarkRecord> records) {
    using Key = std::pair<datagen::Kind, datagen::ElementType>;
    std::map<Key, std::map<std::size_t, std::map<Algo, double>>> cells;
    std::map<Key, std::vector<Algo>> columns;
    for (const BenchmarkRecord& r : records) {
        const Key key{r.kind, r.element_type};
        cells[key][r.n][r.algo] = r.ns_per_nlog2n;
        auto& cols = columns[key];
        if (std::find(cols.begin(), cols.end(), r.algo) == cols.end()) cols.push_back(r.algo);
    }
    for (const auto& [key, rows] : cells) {
        out << datagen::to_string(key.first) << '-' << datagen::to_string(key.second)
            << "  (ns / (n log2 n))\n";
        out << std::setw(10) << "n";
        for (Algo a : columns[key]) out << std::setw(20) << to_string(a);
        out << '\n';
        for (const auto& [n, by_algo] : rows) {
            out << std::setw(10) << n;
            for (Algo a : columns[key]) {
                auto it = by_algo.find(a);
                out << std::setw(20);
                if (it == by_algo.end()) out << '-';
                else out << std::fixed << std::setprecision(4) << it->second;
            }
            out << '\n';
        }
        out.unsetf(std::ios::floatfield);
        out << '\n';
    }
}

double binary_entropy(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("p must lie strictly between 0 and 1");
    }
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double slowdown(double p) {
    return 1.0 / binary_entropy(p);
}

std::vector<std::pair<double, double>> slowdown_table(std::span<const double> ps) {
    std::vector<std::pair<double, double>> table;
    table.reserve(ps.size());
    for (double p : ps) table.emplace_back(p, slowdown(p));
    return table;
}

}  // namespace pdq::bench

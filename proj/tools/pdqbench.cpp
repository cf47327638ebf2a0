// pdqbench: benchmark harness, input generator, entropy table and property suite.
//
//   pdqbench bench --algos pdq,bpdq,baseline --dists uniform,mod8 --sizes 1024..1048576
//                  --types int64,str --seed 1 --min-time 1s --min-iters 10 --out results.csv
//   pdqbench gen --kind mod8 --n 1024 --seed 1 --out file
//   pdqbench slowdown --p 0.05,0.125,0.2,0.5
//   pdqbench verify
//
// Exit codes: 0 success, 1 usage error, 2 verification failure.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "pdq/bench.hpp"
#include "pdq/datagen.hpp"
#include "pdq/verify.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(std::string_view text, char sep = ',') {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(sep, start), text.size());
        if (end > start) out.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::uint64_t parse_count(std::string_view text) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError("not a count: '" + std::string(text) + "'");
    return value;
}

// "1024,4096" or "1024..1048576" (each step multiplies by 4), or a mix of both.
std::vector<std::size_t> parse_sizes(std::string_view text) {
    std::vector<std::size_t> sizes;
    for (const std::string& item : split(text)) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            sizes.push_back(parse_count(item));
            continue;
        }
        const std::uint64_t lo = parse_count(std::string_view(item).substr(0, dots));
        const std::uint64_t hi = parse_count(std::string_view(item).substr(dots + 2));
        if (lo == 0 || lo > hi) throw UsageError("bad size range '" + item + "'");
        for (std::uint64_t n = lo; n <= hi; n *= 4) sizes.push_back(n);
    }
    if (sizes.empty()) throw UsageError("no sizes given");
    return sizes;
}

// "1s", "250ms", "0.5s" or a bare number of seconds.
std::chrono::nanoseconds parse_duration(std::string text) {
    double scale = 1e9;
    if (text.ends_with("ms")) {
        scale = 1e6;
        text.resize(text.size() - 2);
    } else if (text.ends_with("s")) {
        text.resize(text.size() - 1);
    }
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || value < 0)
        throw UsageError("bad duration '" + text + "'");
    return std::chrono::nanoseconds(static_cast<std::int64_t>(value * scale));
}

struct BenchArgs {
    std::string algos = "pdq,bpdq,baseline";
    std::string dists = "uniform,dupsq,dup8,mod8,ones,sort50,sort90,sort99,organ,merge,asc,desc";
    std::string sizes = "1024..1048576";
    std::string types = "int64,str";
    std::uint64_t seed = 1;
    std::string min_time = "1s";
    std::size_t min_iters = 10;
    std::string out;
    bool table = false;
};

int run_bench(const BenchArgs& args) {
    std::vector<pdq::bench::Algo> algos;
    for (const std::string& name : split(args.algos)) {
        const auto algo = pdq::bench::parse_algo(name);
        if (!algo) throw UsageError("unknown algo '" + name + "'");
        algos.push_back(*algo);
    }
    std::vector<pdq::datagen::Kind> kinds;
    for (const std::string& name : split(args.dists)) {
        const auto kind = pdq::datagen::parse_kind(name);
        if (!kind) throw UsageError("unknown distribution '" + name + "'");
        kinds.push_back(*kind);
    }
    std::vector<pdq::datagen::ElementType> types;
    for (const std::string& name : split(args.types)) {
        const auto type = pdq::datagen::parse_element_type(name);
        if (!type) throw UsageError("unknown element type '" + name + "'");
        types.push_back(*type);
    }
    if (algos.empty() || kinds.empty() || types.empty())
        throw UsageError("empty algorithm, distribution or type list");

    std::vector<pdq::datagen::DistributionSpec> specs;
    for (auto type : types)
        for (auto kind : kinds)
            for (std::size_t n : parse_sizes(args.sizes))
                specs.push_back(pdq::datagen::DistributionSpec::make(kind, n, type, args.seed));

    pdq::bench::Policy policy;
    policy.min_time = parse_duration(args.min_time);
    policy.min_iterations = args.min_iters;

    const auto records = pdq::bench::run_benchmark(algos, specs, policy, &std::cerr);
    if (args.out.empty() || args.out == "-") {
        pdq::bench::write_csv(std::cout, records);
    } else {
        std::ofstream file(args.out);
        if (!file) throw std::runtime_error("cannot write " + args.out);
        pdq::bench::write_csv(file, records);
    }
    if (args.table) pdq::bench::write_text_tables(args.out.empty() ? std::cerr : std::cout, records);
    return 0;
}

struct GenArgs {
    std::string kind;
    std::uint64_t n = 0;
    std::uint64_t seed = 1;
    std::string type = "int64";
    std::string out;
};

int run_gen(const GenArgs& args) {
    const auto kind = pdq::datagen::parse_kind(args.kind);
    if (!kind) throw UsageError("unknown distribution '" + args.kind + "'");
    const auto type = pdq::datagen::parse_element_type(args.type);
    if (!type) throw UsageError("unknown element type '" + args.type + "'");
    const auto spec = pdq::datagen::DistributionSpec::make(*kind, args.n, *type, args.seed);
    const auto data = pdq::datagen::generate(spec);
    if (args.out.empty() || args.out == "-") {
        pdq::datagen::write_dataset(std::cout, spec, data);
    } else {
        std::ofstream file(args.out);
        if (!file) throw std::runtime_error("cannot write " + args.out);
        pdq::datagen::write_dataset(file, spec, data);
    }
    return 0;
}

int run_slowdown(const std::string& ps_text) {
    std::vector<double> ps;
    for (const std::string& item : split(ps_text)) {
        std::size_t used = 0;
        double p = 0;
        try {
            p = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw UsageError("not a number: '" + item + "'");
        if (!(p > 0.0 && p < 1.0)) throw UsageError("p must lie in (0, 1): " + item);
        ps.push_back(p);
    }
    std::cout << std::setw(10) << "p" << std::setw(12) << "H(p)" << std::setw(12) << "1/H(p)"
              << '\n';
    for (const auto& [p, factor] : pdq::bench::slowdown_table(ps)) {
        std::cout << std::fixed << std::setprecision(4) << std::setw(10) << p << std::setw(12)
                  << pdq::bench::binary_entropy(p) << std::setw(12) << factor << '\n';
    }
    return 0;
}

int run_verify() {
    const auto results = pdq::verify::run_all(std::cout);
    return pdq::verify::all_gating_passed(results) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern-defeating quicksort benchmark harness"};
    app.require_subcommand(1);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "run the algorithm x distribution matrix");
    bench_cmd->add_option("--algos", bench.algos, "pdq,bpdq,baseline,heapsort");
    bench_cmd->add_option("--dists", bench.dists, "comma separated distributions");
    bench_cmd->add_option("--sizes", bench.sizes, "list and/or lo..hi ranges (x4 steps)");
    bench_cmd->add_option("--types", bench.types, "int64,str,bigstr");
    bench_cmd->add_option("--seed", bench.seed, "generator seed");
    bench_cmd->add_option("--min-time", bench.min_time, "minimum sorting time per cell");
    bench_cmd->add_option("--min-iters", bench.min_iters, "minimum iterations per cell");
    bench_cmd->add_option("--out", bench.out, "CSV output file (default stdout)");
    bench_cmd->add_flag("--table", bench.table, "also print aligned text tables");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "write one generated input");
    gen_cmd->add_option("--kind", gen.kind, "distribution")->required();
    gen_cmd->add_option("--n", gen.n, "number of elements")->required();
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--type", gen.type, "int64, str or bigstr");
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

    std::string ps = "0.05,0.125,0.2,0.5";
    auto* slowdown_cmd = app.add_subcommand("slowdown", "print the 1/H(p) slowdown table");
    slowdown_cmd->add_option("--p", ps, "comma separated fractions in (0, 1)");

    auto* verify_cmd = app.add_subcommand("verify", "run the full property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*bench_cmd) return run_bench(bench);
        if (*gen_cmd) return run_gen(gen);
        if (*slowdown_cmd) return run_slowdown(ps);
        if (*verify_cmd) return run_verify();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

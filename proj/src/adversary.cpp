#include "pdq/adversary.hpp"

#include <numeric>

#include "pdq/pdqsort.hpp"

namespace pdq {
namespace {

struct GasState {
    std::vector<std::int64_t> value;
    std::int64_t gas;
    std::int64_t solid = 0;
    std::int64_t candidate = -1;

    void freeze(std::int64_t item) { value[static_cast<std::size_t>(item)] = solid++; }
    bool is_gas(std::int64_t item) const { return value[static_cast<std::size_t>(item)] == gas; }
};

struct GasOrdering {
    GasState* state;

    bool operator()(std::int64_t x, std::int64_t y) const {
        GasState& s = *state;
        if (s.is_gas(x) && s.is_gas(y)) {
            if (x == s.candidate) s.freeze(x);
            else s.freeze(y);
        }
        if (s.is_gas(x)) s.candidate = x;
        else if (s.is_gas(y)) s.candidate = y;
        return s.value[static_cast<std::size_t>(x)] < s.value[static_cast<std::size_t>(y)];
    }
};

}  // namespace

std::vector<std::int64_t> adversary_input(std::size_t n, const SortConfig& config,
                                          bool block_partition) {
    GasState state;
    state.gas = static_cast<std::int64_t>(n);
    state.value.assign(n, state.gas);

    std::vector<std::int64_t> items(n);
    std::iota(items.begin(), items.end(), std::int64_t{0});

    GasOrdering ordering{&state};
    if (block_partition) sort_with_config(items, assert_branch_cheap(ordering), config);
    else sort_with_config(items, ordering, config);

    for (std::size_t i = 0; i < n; ++i) {
        if (state.is_gas(static_cast<std::int64_t>(i))) state.freeze(static_cast<std::int64_t>(i));
    }
    return std::move(state.value);
}

}  // namespace pdq

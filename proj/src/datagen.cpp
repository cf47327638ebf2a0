#include "pdq/datagen.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace pdq::datagen {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// (base^8) mod m without overflow.
std::uint64_t pow8_mod(std::uint64_t base, std::uint64_t m) {
    using u128 = unsigned __int128;
    std::uint64_t x = base % m;
    for (int i = 0; i < 3; ++i) x = static_cast<std::uint64_t>(u128(x) * x % m);
    return x;
}

int sorted_percent(Kind kind) {
    switch (kind) {
        case Kind::sort50: return 50;
        case Kind::sort90: return 90;
        case Kind::sort99: return 99;
        default: return 0;
    }
}

bool is_shuffled(Kind kind) {
    switch (kind) {
        case Kind::uniform:
        case Kind::dupsq:
        case Kind::dup8:
        case Kind::mod8:
        case Kind::sort50:
        case Kind::sort90:
        case Kind::sort99: return true;
        default: return false;
    }
}

constexpr std::pair<Kind, std::string_view> kKindNames[] = {
    {Kind::uniform, "uniform"}, {Kind::dupsq, "dupsq"},   {Kind::dup8, "dup8"},
    {Kind::mod8, "mod8"},       {Kind::ones, "ones"},     {Kind::sort50, "sort50"},
    {Kind::sort90, "sort90"},   {Kind::sort99, "sort99"}, {Kind::organ, "organ"},
    {Kind::merge, "merge"},     {Kind::asc, "asc"},       {Kind::desc, "desc"},
};

constexpr std::pair<ElementType, std::string_view> kTypeNames[] = {
    {ElementType::int64, "int64"}, {ElementType::str, "str"}, {ElementType::bigstr, "bigstr"}};

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv_update(std::uint64_t& h, std::string_view text) {
    for (unsigned char c : text) {
        h ^= c;
        h *= kFnvPrime;
    }
    h ^= static_cast<unsigned char>('\n');
    h *= kFnvPrime;
}

}  // namespace

DistributionSpec DistributionSpec::make(Kind kind, std::size_t n, ElementType type,
                                        std::uint64_t seed) {
    return {kind, n, type, type == ElementType::bigstr ? kBigstrPad : 0, seed};
}

std::string_view to_string(Kind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "?";
}

std::string_view to_string(ElementType type) {
    for (const auto& [t, name] : kTypeNames)
        if (t == type) return name;
    return "?";
}

std::optional<Kind> parse_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames)
        if (n == name) return k;
    return std::nullopt;
}

std::optional<ElementType> parse_element_type(std::string_view name) {
    for (const auto& [t, n] : kTypeNames)
        if (n == name) return t;
    return std::nullopt;
}

std::uint64_t SplitMix64::next() {
    state_ += kGolden;
    return mix64(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Lemire's multiply-shift with rejection of the biased low range.
    using u128 = unsigned __int128;
    u128 m = u128(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = u128(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t stream_seed(std::uint64_t seed, Kind kind, std::size_t n) {
    const auto k = static_cast<std::uint64_t>(kind) + 1;
    return mix64(mix64(seed ^ (kGolden * k)) ^ static_cast<std::uint64_t>(n));
}

std::vector<std::int64_t> unshuffled_values(Kind kind, std::size_t n) {
    std::vector<std::int64_t> a(n);
    const auto sn = static_cast<std::int64_t>(n);
    const std::size_t half_up = (n + 1) / 2;
    switch (kind) {
        case Kind::uniform:
        case Kind::sort50:
        case Kind::sort90:
        case Kind::sort99:
        case Kind::asc:
            for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<std::int64_t>(i);
            break;
        case Kind::desc:
            for (std::size_t i = 0; i < n; ++i) a[i] = sn - 1 - static_cast<std::int64_t>(i);
            break;
        case Kind::dupsq: {
            const std::uint64_t root = isqrt(n);
            for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<std::int64_t>(i % root);
            break;
        }
        case Kind::dup8:
            for (std::size_t i = 0; i < n; ++i)
                a[i] = static_cast<std::int64_t>((pow8_mod(i, n) + n / 2) % n);
            break;
        case Kind::mod8:
            for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<std::int64_t>(i % 8);
            break;
        case Kind::ones:
            std::fill(a.begin(), a.end(), 1);
            break;
        case Kind::organ:
            // Ascending half takes the extra element for odd n; the descending half mirrors it.
            for (std::size_t i = 0; i < half_up; ++i) a[i] = static_cast<std::int64_t>(i);
            for (std::size_t i = half_up; i < n; ++i) a[i] = static_cast<std::int64_t>(n - 1 - i);
            break;
        case Kind::merge:
            for (std::size_t i = 0; i < half_up; ++i) a[i] = static_cast<std::int64_t>(i);
            for (std::size_t i = half_up; i < n; ++i) a[i] = static_cast<std::int64_t>(i - half_up);
            break;
    }
    return a;
}

std::vector<std::int64_t> generate_values(const DistributionSpec& spec) {
    std::vector<std::int64_t> a = unshuffled_values(spec.kind, spec.n);
    if (!is_shuffled(spec.kind) || a.size() < 2) return a;

    SplitMix64 rng(stream_seed(spec.seed, spec.kind, spec.n));
    for (std::size_t i = a.size() - 1; i > 0; --i) {
        std::swap(a[i], a[rng.below(i + 1)]);
    }
    if (const int percent = sorted_percent(spec.kind)) {
        const std::size_t prefix = spec.n * static_cast<std::size_t>(percent) / 100;
        std::sort(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(prefix));
    }
    return a;
}

std::size_t string_width(std::size_t n) {
    // Digits of n - 1, the largest value a size-n input holds (ceil(log10 n) for n >= 2).
    std::size_t width = 1;
    for (std::size_t v = n > 0 ? n - 1 : 0; v >= 10; v /= 10) ++width;
    return width;
}

std::string encode_string(std::int64_t value, std::size_t width, std::size_t pad_prefix) {
    std::string digits = std::to_string(value);
    std::string out(pad_prefix + (digits.size() < width ? width - digits.size() : 0), '0');
    out += digits;
    return out;
}

std::vector<std::string> generate_strings(const DistributionSpec& spec) {
    const std::vector<std::int64_t> values = generate_values(spec);
    const std::size_t width = string_width(spec.n);
    std::vector<std::string> out;
    out.reserve(values.size());
    for (std::int64_t v : values) out.push_back(encode_string(v, width, spec.pad_prefix));
    return out;
}

Dataset generate(const DistributionSpec& spec) {
    if (spec.element_type == ElementType::int64) return generate_values(spec);
    return generate_strings(spec);
}

std::uint64_t hash_values(const std::vector<std::int64_t>& values) {
    std::uint64_t h = kFnvOffset;
    for (std::int64_t v : values) fnv_update(h, std::to_string(v));
    return h;
}

std::uint64_t hash_values(const std::vector<std::string>& values) {
    std::uint64_t h = kFnvOffset;
    for (const std::string& v : values) fnv_update(h, v);
    return h;
}

std::uint64_t hash_dataset(const Dataset& data) {
    return std::visit([](const auto& values) { return hash_values(values); }, data);
}

void write_dataset(std::ostream& out, const DistributionSpec& spec, const Dataset& data) {
    out << "# " << to_string(spec.kind) << ' ' << spec.n << ' ' << to_string(spec.element_type)
        << ' ' << spec.seed << '\n';
    std::visit(
        [&out](const auto& values) {
            for (const auto& v : values) out << v << '\n';
        },
        data);
}

}  // namespace pdq::datagen

#ifndef PDQ_DATAGEN_HPP
#define PDQ_DATAGEN_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pdq::datagen {

enum class Kind {
    uniform,
    dupsq,
    dup8,
    mod8,
    ones,
    sort50,
    sort90,
    sort99,
    organ,
    merge,
    asc,
    desc,
};

inline constexpr std::array<Kind, 12> kAllKinds = {
    Kind::uniform, Kind::dupsq, Kind::dup8,  Kind::mod8,  Kind::ones, Kind::sort50,
    Kind::sort90,  Kind::sort99, Kind::organ, Kind::merge, Kind::asc,  Kind::desc,
};

enum class ElementType { int64, str, bigstr };

inline constexpr std::size_t kBigstrPad = 1000;

struct DistributionSpec {
    Kind kind = Kind::uniform;
    std::size_t n = 0;
    ElementType element_type = ElementType::int64;
    // Zero characters prepended to every string; ignored for int64.
    std::size_t pad_prefix = 0;
    std::uint64_t seed = 0;

    // Spec with the conventional padding for the element type (1000 for bigstr, else 0).
    static DistributionSpec make(Kind kind, std::size_t n, ElementType type, std::uint64_t seed);
};

using Dataset = std::variant<std::vector<std::int64_t>, std::vector<std::string>>;

std::string_view to_string(Kind kind);
std::string_view to_string(ElementType type);
std::optional<Kind> parse_kind(std::string_view name);
std::optional<ElementType> parse_element_type(std::string_view name);

// splitmix64 generator; the state advances by a fixed increment per output.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform integer in [0, bound), bound > 0, unbiased.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Seed of the shuffle stream for one (seed, kind, n) cell.
std::uint64_t stream_seed(std::uint64_t seed, Kind kind, std::size_t n);

// Values before any shuffling.
std::vector<std::int64_t> unshuffled_values(Kind kind, std::size_t n);

// Final integer values of a distribution (shuffled where the kind requires it).
std::vector<std::int64_t> generate_values(const DistributionSpec& spec);

// Width of the zero-padded decimal encoding for inputs of size n.
std::size_t string_width(std::size_t n);

std::string encode_string(std::int64_t value, std::size_t width, std::size_t pad_prefix);

std::vector<std::string> generate_strings(const DistributionSpec& spec);

Dataset generate(const DistributionSpec& spec);

// FNV-1a over the decimal text of each value, one '\n' terminated line per element.
std::uint64_t hash_values(const std::vector<std::int64_t>& values);
std::uint64_t hash_values(const std::vector<std::string>& values);
std::uint64_t hash_dataset(const Dataset& data);

// Writes the `gen` file format: "# kind n element_type seed" then one value per line.
void write_dataset(std::ostream& out, const DistributionSpec& spec, const Dataset& data);

}  // namespace pdq::datagen

#endif  // PDQ_DATAGEN_HPP

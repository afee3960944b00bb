#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace udnsim {

inline constexpr const char* kVersion = "0.1.0";

// Unrecoverable misuse of an API contract (e.g. mismatched array lengths).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// Invalid configuration: bad window dimensions, bad scaling params, unparseable config file.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Path-loss model outside the physically feasible family (e.g. divergent gamma integral).
struct InfeasibleModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature or iteration failure with diagnostics in the message.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoServingBsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientPointsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Identifies one random substream. Trials derive independent substreams from
// (master_seed, substream); identical paths reproduce bit-identical draws on
// any thread count.
struct SeedPath {
    std::uint64_t master_seed = 0;
    std::uint64_t substream = 0;

    bool operator==(const SeedPath&) const = default;
};

// Substream purposes keep geometry and fading draws of the same trial disjoint.
enum class StreamPurpose : std::uint64_t {
    geometry = 0,
    fading = 1,
    aux = 2,
};

// Layout: [purpose:8 | density_index:16 | trial_index:40].
inline std::uint64_t make_substream(StreamPurpose purpose, std::uint64_t density_index,
                                    std::uint64_t trial_index) {
    if (density_index >= (1ull << 16) || trial_index >= (1ull << 40)) {
        throw ContractError("make_substream: index out of range");
    }
    return (static_cast<std::uint64_t>(purpose) << 56) | (density_index << 40) | trial_index;
}

inline SeedPath trial_seed_path(std::uint64_t master_seed, StreamPurpose purpose,
                                std::uint64_t density_index, std::uint64_t trial_index) {
    return SeedPath{master_seed, make_substream(purpose, density_index, trial_index)};
}

}  // namespace udnsim

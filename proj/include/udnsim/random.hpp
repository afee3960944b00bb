#pragma once

/**
 * Counter-based random number generation (Philox4x32-10) plus the samplers
 * the simulator needs: uniforms, exponentials, normals, integer-shape gamma
 * and Poisson counts. A RandomStream is cheap to construct, holds no global
 * state, and is fully determined by its SeedPath, so trials can run on any
 * number of threads and still reproduce bit-identically.
 */

#include <array>
#include <cstdint>

#include "udnsim/common.hpp"

namespace udnsim {

// One 128-bit Philox4x32-10 block for (counter, key).
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

class RandomStream {
  public:
    explicit RandomStream(SeedPath path);

    // Uniform on [0, 1) with 53 random bits.
    double uniform();
    // Uniform on (0, 1]; safe under log().
    double uniform_pos();
    double uniform_range(double lo, double hi);

    std::uint64_t next_u64();

    // Unit-mean exponential.
    double exponential();
    // Standard normal (Box-Muller, pairs cached).
    double normal();
    // Gamma(shape, 1) for integer shape >= 1 (Marsaglia-Tsang).
    double gamma_integer_shape(int shape);
    // Poisson(mean), mean >= 0.
    std::uint64_t poisson(double mean);

    SeedPath path() const { return path_; }

  private:
    void refill();

    SeedPath path_;
    std::array<std::uint32_t, 2> key_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int cursor_ = 4;  // forces refill on first draw
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace udnsim

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gals {

// Deterministic random stream. std::mt19937_64 output is specified by the
// standard, but the standard distributions are not, so the integer and
// [0,1) helpers are implemented here to make identical seeds give identical
// runs on every platform. Substreams derive fresh, decorrelated streams
// from the base seed (never from draw state), so substream(a, b) is
// reproducible no matter how much the parent stream was consumed.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64();

    // Uniform on {0, ..., bound-1} by rejection; bound >= 1.
    int uniform_int(int bound);
    // Uniform on [0, 1) with 53 random mantissa bits.
    double uniform01();
    bool coin();

    // Child stream keyed by (a, b); same key always yields the same stream.
    RngStream substream(std::uint64_t a, std::uint64_t b = 0) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

} // namespace gals

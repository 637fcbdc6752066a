#include "gals/rng.hpp"

#include <stdexcept>

namespace gals {

namespace {

// splitmix64 finalizer; used for seed mixing only, never for draws.
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed), eng_(mix(seed)) {}

std::uint64_t RngStream::next_u64() { return eng_(); }

int RngStream::uniform_int(int bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_int needs bound >= 1");
    std::uint64_t b = static_cast<std::uint64_t>(bound);
    // Reject the low sliver so the remaining range splits evenly.
    std::uint64_t threshold = (-b) % b;
    std::uint64_t x = next_u64();
    while (x < threshold) x = next_u64();
    return static_cast<int>(x % b);
}

double RngStream::uniform01() {
    return (next_u64() >> 11) * 0x1.0p-53;
}

bool RngStream::coin() { return (next_u64() & 1) != 0; }

RngStream RngStream::substream(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t child = mix(mix(seed_ ^ mix(a)) ^ mix(~b));
    return RngStream(child);
}

} // namespace gals

#pragma once

// Deterministic seeding. A single 64-bit master seed expands into named
// substreams: stream state = splitmix64(master ^ fnv1a64(name)). Streams are
// keyed by name, not by creation order, so adding a component never perturbs
// the draws of existing components.

#include <cstdint>
#include <string_view>

#include "phygital/common.hpp"

namespace phygital {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::string_view component)
        : state_(master_seed ^ fnv1a64(component)) {
        // decorrelate streams whose XORed seeds are close
        splitmix64_next(state_);
    }

    std::uint64_t next_u64() { return splitmix64_next(state_); }

    // uniform in [0, 1)
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // index in [0, n)
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

}  // namespace phygital

#pragma once

// Error taxonomy and small formatting helpers shared by every module.
//
// All numeric output (CSV, JSON, hashes of canonicalized configs) goes
// through format_double so that two runs of the same configuration produce
// byte-identical artifacts.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace phygital {

// Malformed shapes, missing points, open polylines, unresolved references.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arguments outside an operation's mathematical domain (v=0 Hessian,
// R outside [0,1], negative shear norms, point off a tabulated grid).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values, PSD violations, Randers-condition failures.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simulation blow-up; message names the entity and the term magnitudes.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_finite(double x) { return std::isfinite(x); }

// Shortest round-trip decimal representation. Deterministic across runs,
// locale-independent.
inline std::string format_double(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

// FNV-1a, used for run ids and seed-substream derivation.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace phygital

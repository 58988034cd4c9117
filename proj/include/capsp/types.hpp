#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <cmath>

namespace capsp {

// Node IDs are 1..n. Weights are nonnegative integers; INF is the sentinel for
// "no path" and all arithmetic saturates at it.
using NodeId = int;
using Weight = std::uint64_t;

inline constexpr Weight INF = std::numeric_limits<Weight>::max();

inline Weight sat_add(Weight a, Weight b) {
    if (a == INF || b == INF) return INF;
    Weight s = a + b;
    return (s < a) ? INF : s;
}

inline Weight sat_mul(Weight a, Weight b) {
    if (a == 0 || b == 0) return 0;
    if (a == INF || b == INF) return INF;
    if (a > INF / b) return INF;
    return a * b;
}

// Per-node receive load exceeded the declared quota. Indicates the algorithm
// diverged from its load analysis; the run is aborted.
struct QuotaExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Actual product density exceeded the bound the caller promised.
struct DensityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structure grew past the budget assumed by the routing/broadcast analysis.
struct SizeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scale-selection picked a graph index outside the constructed family.
struct IndexOutOfFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double log2d(double x) { return std::log2(x); }

// ceil(log2(x)) for x >= 1
inline int ceil_log2(std::uint64_t x) {
    int b = 0;
    std::uint64_t p = 1;
    while (p < x) {
        p = sat_mul(p, 2);
        ++b;
    }
    return b;
}

// ceil(log2 log2 log2 max(n,16)), the round-scaling yardstick used in reports.
inline int ceil_logloglog2(int n) {
    double v = log2d(log2d(log2d(static_cast<double>(std::max(n, 16)))));
    return static_cast<int>(std::ceil(v - 1e-12));
}

}  // namespace capsp

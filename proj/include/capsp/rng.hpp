#pragma once

#include <cstdint>
#include <string_view>

namespace capsp {

// Splittable counter-based generator. Streams are keyed by (seed, tag, node)
// so every module/node draws from an independent deterministic stream and the
// draw order of one stream never perturbs another. Core mixer is splitmix64.
class SplitRng {
public:
    SplitRng(std::uint64_t seed, std::string_view tag, std::uint64_t node = 0)
        : key_(mix(mix(mix(seed) ^ hash_tag(tag)) ^ node)), ctr_(0) {}

    std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++ctr_); }

    // uniform in [0,1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [lo,hi] inclusive; Lemire-style bounded draw, deterministic.
    std::uint64_t next_in(std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t span = hi - lo + 1;
        if (span == 0) return next_u64();  // full 64-bit range
        __uint128_t m = static_cast<__uint128_t>(next_u64()) * span;
        return lo + static_cast<std::uint64_t>(m >> 64);
    }

    bool next_bernoulli(double p) { return next_double() < p; }

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t hash_tag(std::string_view tag) {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    std::uint64_t key_;
    std::uint64_t ctr_;
};

}  // namespace capsp

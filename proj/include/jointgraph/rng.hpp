#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace jointgraph {

// Portable counter-free RNG built on the splitmix64 finalizer. Streams are
// derived by hashing a root seed with small integer keys, so independent
// work items (replicates, edges) can draw from independent deterministic
// streams regardless of execution order or thread scheduling.

inline std::uint64_t splitmix64_mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double next_open_double() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound); rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
        const std::uint64_t threshold = (0ull - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Standard normal via Box-Muller.
    double next_normal() {
        const double u1 = next_open_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::uint64_t state_;
};

/// Derives an independent stream from a root seed and up to three keys.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t k1 = 0, std::uint64_t k2 = 0,
                      std::uint64_t k3 = 0) {
    std::uint64_t s = splitmix64_mix(seed ^ 0xA3C59AC2F0B2FA9Dull);
    s = splitmix64_mix(s ^ k1);
    s = splitmix64_mix(s ^ k2);
    s = splitmix64_mix(s ^ k3);
    return Rng(s);
}

/// Draws m distinct indices from [0, n) in draw order (partial Fisher-Yates).
inline std::vector<int> sample_without_replacement(Rng& rng, int n, int m) {
    if (m < 0 || m > n) throw std::invalid_argument("sample_without_replacement: need 0 <= m <= n");
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const auto j = static_cast<std::size_t>(i) +
                       static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        out[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace jointgraph

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace fpg {

// Deterministic 64-bit generator (splitmix64). Hand-rolled so that draw
// sequences are pinned by this header alone, independent of the standard
// library's distribution implementations.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) : state_(seed) {}

    // Derives an independent stream from a master seed. Streams with
    // different ids never share a state trajectory in practice.
    static Rng stream(uint64_t master, uint64_t stream_id) {
        Rng r(master ^ (0x9E3779B97F4A7C15ULL * (stream_id + 1)));
        r.next_u64();
        r.next_u64();
        return r;
    }

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). Lemire multiply-shift; bias is < 2^-32 for
    // the n used here.
    int uniform_int(int n) {
        return static_cast<int>((static_cast<__uint128_t>(next_u64()) *
                                 static_cast<uint64_t>(n)) >> 64);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Box-Muller without the cached spare: two uniforms per draw, so the
    // state advance per call is fixed.
    double normal(double mean = 0.0, double sigma = 1.0) {
        double u1 = uniform01();
        if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sigma * r * std::cos(6.283185307179586 * u2);
    }

    // k distinct indices from [0, n), k <= n. Order is draw order.
    std::vector<size_t> sample_indices(size_t k, size_t n) {
        std::vector<size_t> out;
        out.reserve(k);
        // Floyd's algorithm
        for (size_t j = n - k; j < n; ++j) {
            size_t t = static_cast<size_t>(uniform_int(static_cast<int>(j + 1)));
            bool seen = false;
            for (size_t v : out)
                if (v == t) { seen = true; break; }
            out.push_back(seen ? j : t);
        }
        return out;
    }

private:
    uint64_t state_;
};

} // namespace fpg

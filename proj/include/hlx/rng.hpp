#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace hlx {

// Deterministic 64-bit generator (splitmix64). Self-contained so that
// streams are reproducible across standard libraries and platforms;
// std::uniform_*_distribution is implementation-defined and would break
// byte-identical reruns of the pipeline.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0.
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection sampling on the top bits to avoid modulo bias.
        std::uint64_t threshold = (0ULL - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double normal(double mean = 0.0, double stddev = 1.0) {
        // Box-Muller; one value per call keeps the stream position predictable.
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a_hash(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Named sub-stream seed: all randomness in the pipeline flows from one root
// seed through these, so parallel stages stay deterministic.
inline std::uint64_t substream_seed(std::uint64_t root, std::string_view name) {
    std::uint64_t h = fnv1a_hash(name);
    std::uint64_t z = root ^ (h + 0x9e3779b97f4a7c15ULL + (root << 6) + (root >> 2));
    return z ? z : 0x9e3779b97f4a7c15ULL;
}

inline std::uint64_t substream_seed(std::uint64_t root, std::string_view name,
                                    std::uint64_t index) {
    return substream_seed(root, name) ^ (0x2545f4914f6cdd1dULL * (index + 1));
}

}  // namespace hlx

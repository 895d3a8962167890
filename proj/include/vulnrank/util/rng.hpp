#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace vulnrank {

// Deterministic random stream. mt19937_64 output is bit-exact by the
// standard; the value mappings below are hand-rolled because the std
// distributions are implementation-defined and would break reproducible
// artifacts across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    // [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    float uniformf(float lo, float hi) {
        return lo + (hi - lo) * static_cast<float>(uniform());
    }

    // [0, n), n > 0
    uint64_t below(uint64_t n) { return next() % n; }

    // [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) { return uniform() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

private:
    std::mt19937_64 engine_;
};

// Derives independent named sub-seeds from one root seed (splitmix64 over
// the root xor a tag hash), so pipeline stages are individually reproducible.
inline uint64_t sub_seed(uint64_t root, std::string_view tag, uint64_t index = 0) {
    uint64_t h = 1469598103934665603ull;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    uint64_t z = root ^ h ^ (index * 0x9e3779b97f4a7c15ull);
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace vulnrank

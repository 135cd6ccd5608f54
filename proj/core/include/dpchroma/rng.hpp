#pragma once

#include <cstdint>
#include <vector>

namespace dpchroma {

/// Deterministic splitmix64 generator. Used instead of <random> engines and
/// distributions so that sampled suites are byte-identical across standard
/// libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound >= 1, rejection sampled (no modulo bias).
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

    int below_int(int bound) noexcept { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

private:
    std::uint64_t state_;
};

/// Fisher-Yates shuffle of 0..m-1; a uniform random one-line notation.
inline std::vector<int> random_images(SplitMix64& rng, int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = i;
    for (int i = m - 1; i > 0; --i) {
        const int j = rng.below_int(i + 1);
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
    }
    return img;
}

} // namespace dpchroma

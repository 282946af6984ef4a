#ifndef BERGEHIT_RNG_HPP
#define BERGEHIT_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <utility>

namespace bergehit {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derive an independent stream key from a parent key and a tag.
constexpr std::uint64_t derive_seed(std::uint64_t key, std::uint64_t tag) noexcept {
    return mix64(key ^ mix64(tag + 0x632BE59BD9B4E019ULL));
}

/**
 * Counter-based SplitMix64 stream.
 *
 * The i-th output (i = 1, 2, ...) is mix64(key + i * 0x9E3779B97F4A7C15), so
 * any output can be recomputed from (key, counter) alone. This is the same
 * sequence as the reference SplitMix64 seeded with `key`, which makes runs
 * reproducible across platforms and languages.
 */
class Rng {
public:
    using result_type = std::uint64_t;

    explicit constexpr Rng(std::uint64_t key) noexcept : key_(key) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~std::uint64_t{0}; }

    constexpr result_type operator()() noexcept {
        ++counter_;
        return mix64(key_ + counter_ * kGamma);
    }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) noexcept {
        // Lemire's multiply-shift with rejection; exact uniformity.
        unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>((*this)()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Fisher-Yates over any random-access range.
    template <typename Range>
    void shuffle(Range& items) noexcept {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    constexpr std::uint64_t key() const noexcept { return key_; }
    constexpr std::uint64_t counter() const noexcept { return counter_; }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace bergehit

#endif  // BERGEHIT_RNG_HPP

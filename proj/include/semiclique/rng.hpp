#pragma once

// Counter-based deterministic random streams. Every consumer of randomness
// owns a Stream keyed by (seed, label), so adding or removing one consumer
// never shifts the bits another consumer sees. Reproducibility is promised
// within this implementation only.

#include <cstdint>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace semiclique {

/// SplitMix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a over bytes; used to key streams by label strings.
constexpr std::uint64_t stable_hash(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::string_view label) noexcept {
    return mix64(base ^ stable_hash(label));
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::string_view label,
                                    std::uint64_t index) noexcept {
    return mix64(derive_seed(base, label) + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

class Stream {
public:
    explicit Stream(std::uint64_t key) : key_(key) {}
    Stream(std::uint64_t seed, std::string_view label) : key_(derive_seed(seed, label)) {}

    std::uint64_t next_u64() { return mix64(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

    bool next_bit() {
        if (bit_count_ == 0) {
            bit_buffer_ = next_u64();
            bit_count_ = 64;
        }
        bool b = bit_buffer_ & 1;
        bit_buffer_ >>= 1;
        --bit_count_;
        return b;
    }

    /// Unbiased integer in [0, bound) via rejection.
    std::uint64_t uniform(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("uniform: bound must be positive");
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t r = next_u64();
        while (r >= limit) r = next_u64();
        return r % bound;
    }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller, spare value cached.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] so the log is finite.
        double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = next_unit();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// `count` distinct values from [0, bound), in draw order (partial Fisher-Yates).
    std::vector<std::uint32_t> sample_distinct(std::uint32_t bound, std::size_t count) {
        if (count > bound) throw std::invalid_argument("sample_distinct: count exceeds bound");
        std::vector<std::uint32_t> pool(bound);
        for (std::uint32_t i = 0; i < bound; ++i) pool[i] = i;
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t j = i + static_cast<std::size_t>(uniform(bound - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(count);
        return pool;
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    std::uint64_t bit_buffer_ = 0;
    int bit_count_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace semiclique

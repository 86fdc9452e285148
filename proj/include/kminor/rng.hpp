#pragma once

#include <cstdint>

namespace kminor {

/// Counter-based 64-bit generator (splitmix64). A (seed, stream) pair pins
/// the whole sequence, so every randomized routine in the project is
/// reproducible bit-for-bit across platforms. Derived streams are
/// independent for testing purposes.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream),
          state_(mix(mix(seed) + 0x9E3779B97F4A7C15ull * (stream + 1))) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform draw in [0, bound), unbiased via rejection. bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (-bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bit() { return next_u64() >> 63; }

    /// Independent substream; (seed, stream, k) fully determines it.
    RngStream derive(std::uint64_t k) const {
        return RngStream(seed_, mix(stream_ + 0x632BE59BD9B4E019ull) + k);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t state_;
};

}  // namespace kminor

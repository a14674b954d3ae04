#pragma once

#include <array>
#include <cstdint>

namespace netdicke {

// Philox4x32-10 counter-based generator (Salmon et al. 2011). Keyed by the
// 64-bit seed, with a 64-bit stream id occupying the high counter words, so a
// single seed yields independent sequences per stream. Stateless apart from
// the block index, which makes output reproducible byte for byte regardless
// of platform or thread schedule.
class PhiloxRng {
  public:
    using result_type = std::uint32_t;

    explicit PhiloxRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return 0xffffffffu; }

    static std::array<std::uint32_t, 4> block(
        std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ull * ctr[0];
            const std::uint64_t p1 = 0xCD9E8D57ull * ctr[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const auto lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += 0x9E3779B9u;
            key[1] += 0xBB67AE85u;
        }
        return ctr;
    }

    result_type operator()() {
        if (pos_ == 4) {
            buf_ = block({static_cast<std::uint32_t>(counter_),
                          static_cast<std::uint32_t>(counter_ >> 32),
                          static_cast<std::uint32_t>(stream_),
                          static_cast<std::uint32_t>(stream_ >> 32)},
                         {static_cast<std::uint32_t>(seed_),
                          static_cast<std::uint32_t>(seed_ >> 32)});
            ++counter_;
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    std::uint64_t u64() {
        const std::uint64_t lo = (*this)();
        const std::uint64_t hi = (*this)();
        return (hi << 32) | lo;
    }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t threshold = (0ull - n) % n;
        for (;;) {
            const std::uint64_t r = u64();
            if (r >= threshold) return r % n;
        }
    }

    // 53-bit uniform in [0, 1).
    double uniform_double() {
        return static_cast<double>(u64() >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
};

}  // namespace netdicke

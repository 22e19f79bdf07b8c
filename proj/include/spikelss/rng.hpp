#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace spikelss {

// Philox4x32-10 counter-based generator. A stream is fixed by its 64-bit key
// and the upper 64 bits of the counter, so (seed, cell, replication) give
// independent, schedule-free streams.
class Philox {
public:
    using Block = std::array<std::uint32_t, 4>;

    static Block round10(Block ctr, std::array<std::uint32_t, 2> key) {
        constexpr std::uint32_t kMul0 = 0xD2511F53u, kMul1 = 0xCD9E8D57u;
        constexpr std::uint32_t kWeyl0 = 0x9E3779B9u, kWeyl1 = 0xBB67AE85u;
        for (int r = 0; r < 10; ++r) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }
};

class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t cell, std::uint64_t replication)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          hi_{static_cast<std::uint32_t>(cell), static_cast<std::uint32_t>(cell >> 32) ^
                                                    static_cast<std::uint32_t>(replication >> 32)},
          rep_(static_cast<std::uint32_t>(replication)) {}

    // Independent substream, e.g. for a per-cell rotation.
    RngStream split(std::uint64_t tag) const {
        RngStream s = *this;
        s.hi_[1] ^= static_cast<std::uint32_t>(tag * 0x9E3779B9u + 0x7F4A7C15u);
        s.counter_ = 0;
        s.used_ = 4;
        s.has_spare_ = false;
        return s;
    }

    std::uint32_t next_u32() {
        if (used_ == 4) {
            block_ = Philox::round10({static_cast<std::uint32_t>(counter_), rep_, hi_[0], hi_[1]}, key_);
            ++counter_;
            used_ = 0;
        }
        return block_[used_++];
    }

    // Uniform on (0, 1), 53 bits.
    double uniform() {
        const std::uint64_t a = next_u32() >> 5, b = next_u32() >> 6;
        return (static_cast<double>(a * 67108864ull + b) + 0.5) / 9007199254740992.0;
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double t = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    double exponential() { return -std::log(uniform()); }

private:
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> hi_;
    std::uint32_t rep_;
    std::uint64_t counter_ = 0;
    Philox::Block block_{};
    int used_ = 4;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace spikelss

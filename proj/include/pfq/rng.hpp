#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace pfq {

/// Philox4x32-10 counter-based generator. Streams are independent for
/// distinct (seed, stream) pairs; jump-ahead is counter arithmetic.
class Philox {
  public:
    explicit Philox(std::uint64_t seed, std::uint64_t stream = 0) {
        key_[0] = std::uint32_t(seed);
        key_[1] = std::uint32_t(seed >> 32);
        ctr_[2] = std::uint32_t(stream);
        ctr_[3] = std::uint32_t(stream >> 32);
    }

    std::uint32_t next_u32() {
        if (idx_ == 4) {
            gen_block();
            idx_ = 0;
        }
        return out_[idx_++];
    }

    std::uint64_t next_u64() {
        std::uint64_t lo = next_u32();
        return lo | (std::uint64_t(next_u32()) << 32);
    }

    /// uniform on [0, 1) with 53 random bits
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    /// advance by n blocks; the counter is 64-bit per stream (wraps at 2^64)
    void skip(std::uint64_t n) {
        std::uint64_t lo = (std::uint64_t(ctr_[1]) << 32) | ctr_[0];
        lo += n;
        ctr_[0] = std::uint32_t(lo);
        ctr_[1] = std::uint32_t(lo >> 32);
        idx_ = 4;
        has_spare_ = false;
    }

  private:
    static std::uint32_t mulhi(std::uint32_t a, std::uint32_t b, std::uint32_t& lo) {
        std::uint64_t p = std::uint64_t(a) * b;
        lo = std::uint32_t(p);
        return std::uint32_t(p >> 32);
    }

    void gen_block() {
        std::uint32_t c0 = ctr_[0], c1 = ctr_[1], c2 = ctr_[2], c3 = ctr_[3];
        std::uint32_t k0 = key_[0], k1 = key_[1];
        for (int round = 0; round < 10; ++round) {
            std::uint32_t lo0, lo1;
            std::uint32_t hi0 = mulhi(0xD2511F53u, c0, lo0);
            std::uint32_t hi1 = mulhi(0xCD9E8D57u, c2, lo1);
            std::uint32_t n0 = hi1 ^ c1 ^ k0;
            std::uint32_t n1 = lo1;
            std::uint32_t n2 = hi0 ^ c3 ^ k1;
            std::uint32_t n3 = lo0;
            c0 = n0; c1 = n1; c2 = n2; c3 = n3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        out_[0] = c0; out_[1] = c1; out_[2] = c2; out_[3] = c3;
        if (++ctr_[0] == 0) ++ctr_[1];  // ctr_[2..3] stay the stream id
    }

    std::uint32_t ctr_[4] = {0, 0, 0, 0};
    std::uint32_t key_[2] = {0, 0};
    std::uint32_t out_[4] = {0, 0, 0, 0};
    int idx_ = 4;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace pfq

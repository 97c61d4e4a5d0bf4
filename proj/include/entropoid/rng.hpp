#pragma once

// Injected randomness. Everything that samples takes a RandomSource&, so any
// run can be made reproducible by passing the seeded mt19937_64 source.

#include <cstdint>
#include <cstddef>
#include <random>

namespace entropoid {

struct RandomSource {
    virtual ~RandomSource() = default;
    // Fills buf with n uniform bytes.
    virtual void fill(uint8_t* buf, size_t n) = 0;

    uint64_t next_u64() {
        uint8_t b[8];
        fill(b, 8);
        uint64_t v = 0;
        for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
        return v;
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do { v = next_u64(); } while (v >= limit);
        return v % bound;
    }
};

// Deterministic source; the std::mt19937_64 stream is pinned by the standard,
// so seeded runs reproduce across platforms.
class Mt19937Rng final : public RandomSource {
public:
    explicit Mt19937Rng(uint64_t seed) : eng_(seed) {}
    void fill(uint8_t* buf, size_t n) override {
        for (size_t i = 0; i < n; ++i) {
            if (have_ == 0) { word_ = eng_(); have_ = 8; }
            buf[i] = static_cast<uint8_t>(word_ & 0xff);
            word_ >>= 8;
            --have_;
        }
    }
private:
    std::mt19937_64 eng_;
    uint64_t word_ = 0;
    int have_ = 0;
};

// OS-backed source for non-seeded runs.
class SystemRng final : public RandomSource {
public:
    void fill(uint8_t* buf, size_t n) override {
        for (size_t i = 0; i < n; ++i) {
            if (have_ == 0) {
                word_ = (static_cast<uint64_t>(dev_()) << 32) | dev_();
                have_ = 8;
            }
            buf[i] = static_cast<uint8_t>(word_ & 0xff);
            word_ >>= 8;
            --have_;
        }
    }
private:
    std::random_device dev_;
    uint64_t word_ = 0;
    int have_ = 0;
};

} // namespace entropoid

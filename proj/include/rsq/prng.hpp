#pragma once

#include <cstdint>

namespace rsq {

// splitmix64; deterministic across platforms, used for seeded search only.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // small signed integer in [-range, range]
    long small_int(long range) { return (long)below(2 * (std::uint64_t)range + 1) - range; }

private:
    std::uint64_t state_;
};

} // namespace rsq

#ifndef PEEL_RNG_HPP
#define PEEL_RNG_HPP

#include <cstdint>

namespace peel {

// Deterministic PRNG, written out in full so ports in other languages can
// reproduce the exact streams.
//
// splitmix64 (state s):
//   s += 0x9E3779B97F4A7C15
//   z  = s
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// xoshiro256** (state s0..s3, seeded with four consecutive splitmix64
// outputs):
//   result = rotl(s1 * 5, 7) * 9
//   t  = s1 << 17
//   s2 ^= s0;  s3 ^= s1;  s1 ^= s2;  s0 ^= s3
//   s2 ^= t;   s3 = rotl(s3, 45)
//
// Derived draws:
//   unit()        = (next() >> 11) * 2^-53, uniform in [0, 1)
//   below(b)      = next() % b  (the modulo bias is irrelevant at the
//                   sample sizes this library targets and keeps the
//                   mapping trivially portable)
//   range(lo, hi) = lo + below(hi - lo + 1), inclusive ends

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next()
    {
        state += 0x9E3779B97F4A7C15ull;
        return mix(state);
    }

    static uint64_t mix(uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

class Xoshiro256 {
public:
    explicit Xoshiro256(uint64_t seed)
    {
        SplitMix64 sm(seed);
        for (auto& w : s_)
            w = sm.next();
    }

    uint64_t next()
    {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    uint64_t below(uint64_t bound) { return next() % bound; }

    int range(int lo, int hi)
    {
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo) + 1));
    }

    double real_range(double lo, double hi) { return lo + unit() * (hi - lo); }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
};

} // namespace peel

#endif

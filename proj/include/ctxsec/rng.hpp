#pragma once

#include <cstdint>
#include <random>

#include "ctxsec/common.hpp"

namespace ctxsec {

// Run-level deterministic generator. All randomness in a run (noise
// transforms, session key material) flows through one instance so a fixed
// seed reproduces identical traces. uniform() avoids
// std::uniform_real_distribution, whose output is not pinned by the
// standard.
class RunRng {
public:
    explicit RunRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform double in [lo, hi), 53-bit resolution.
    double uniform(double lo, double hi) {
        double unit = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + unit * (hi - lo);
    }

    Bytes bytes(std::size_t n) {
        Bytes out(n);
        std::size_t i = 0;
        while (i < n) {
            std::uint64_t v = gen_();
            for (int b = 0; b < 8 && i < n; ++b, ++i) {
                out[i] = static_cast<unsigned char>(v >> (8 * b));
            }
        }
        return out;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace ctxsec

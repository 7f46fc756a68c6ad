// Copyright (c) 2026 The aggsim Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace aggsim {

// SplitMix64 finalizer. Used both as a standalone hash and to expand seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic stream derivation: every (master, index...) tuple maps to a
// fixed 64-bit seed regardless of evaluation order or thread count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t s1, std::uint64_t s2 = 0) {
    std::uint64_t z = mix64(master);
    z = mix64(z ^ s1);
    return mix64(z ^ s2);
}

// xoshiro256++ (Blackman & Vigna). Self-contained so that generated byte
// streams are identical across compilers and standard libraries.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) {
            sm += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53 bits of precision.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Circularly symmetric complex Gaussian with E|z|^2 = 1 (polar method;
    // |z|^2 is exactly Exp(1) distributed).
    std::complex<double> complex_normal() {
        for (;;) {
            const double v1 = 2.0 * uniform() - 1.0;
            const double v2 = 2.0 * uniform() - 1.0;
            const double s = v1 * v1 + v2 * v2;
            if (s > 0.0 && s < 1.0) {
                const double f = std::sqrt(-std::log(s) / s);
                return {v1 * f, v2 * f};
            }
        }
    }

    // Standard real Gaussian, mean 0, variance 1.
    double normal() {
        const std::complex<double> z = complex_normal();
        return z.real() * std::sqrt(2.0);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> s_;
};

}  // namespace aggsim

// Copyright 2026 The zld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZLD_RNG_H
#define ZLD_RNG_H

#include <cstdint>
#include <random>

namespace zld {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of shot `shot` under master seed `master`.
inline uint64_t shot_seed(uint64_t master, uint64_t shot) {
    return splitmix64(splitmix64(master) ^ splitmix64(shot + 0x51ED270B27A1C3ULL));
}

/// Bit-exact across platforms: mt19937_64 output is standardized and the
/// conversions below avoid library distributions.
class Rng {
   public:
    explicit Rng(uint64_t seed) : eng_(seed) {
    }
    uint64_t next() {
        return eng_();
    }
    /// Uniform in [0, 1).
    double uniform() {
        return (double)(eng_() >> 11) * 0x1.0p-53;
    }
    /// Uniform in [0, n).
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }
    bool coin() {
        return eng_() >> 63;
    }

   private:
    std::mt19937_64 eng_;
};

}  // namespace zld

#endif

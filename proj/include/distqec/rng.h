// Copyright 2026 The distqec Authors
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

#ifndef DISTQEC_RNG_H
#define DISTQEC_RNG_H

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace distqec {

/// Seedable, splittable random stream.
///
/// Every stochastic operation in the library takes an explicit `Rng&` so that
/// a run is reproducible from its seed alone. Streams for independent trials
/// are derived with `Rng::stream(master_seed, index)`, which mixes both values
/// through SplitMix64 before seeding the engine; the result does not depend on
/// the order in which streams are created.
///
/// Floating point draws are built from raw engine bits rather than
/// std::uniform_real_distribution so that outputs are identical across
/// standard library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(splitmix64(seed)) {
    }

    static Rng stream(uint64_t master_seed, uint64_t index) {
        return Rng(splitmix64(master_seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
    }

    uint64_t next() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        if (p <= 0) {
            return false;
        }
        if (p >= 1) {
            return true;
        }
        return uniform() < p;
    }

    /// Uniform integer in [0, n). Requires n > 0.
    uint64_t below(uint64_t n) {
        // Rejection sampling keeps the draw unbiased for any n.
        uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
        uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % n;
    }

    /// Number of Bernoulli(p) trials up to and including the first success.
    uint64_t geometric(double p) {
        if (p >= 1) {
            return 1;
        }
        double u = uniform();
        // Inversion: P(G > k) = (1-p)^k.
        double g = std::ceil(std::log1p(-u) / std::log1p(-p));
        return g < 1 ? 1 : static_cast<uint64_t>(g);
    }

    static uint64_t splitmix64(uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace distqec

#endif

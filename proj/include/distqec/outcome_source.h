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

#ifndef DISTQEC_OUTCOME_SOURCE_H
#define DISTQEC_OUTCOME_SOURCE_H

#include <cstddef>
#include <vector>

#include "distqec/rng.h"

namespace distqec {

/// Supplies the results of measurements whose outcome is not forced by the
/// state. Simulators call `draw` only for non-deterministic measurements.
class OutcomeSource {
   public:
    virtual ~OutcomeSource() = default;
    /// Returns true for the -1 outcome, which has probability `p_minus`.
    virtual bool draw(double p_minus) = 0;
};

/// Born-rule sampling: the -1 outcome is taken when a uniform draw falls below
/// its probability. The tableau and state vector simulators both use this, so
/// the same seed yields the same record on both.
class RngOutcomes : public OutcomeSource {
   public:
    explicit RngOutcomes(Rng &rng) : rng_(rng) {
    }
    bool draw(double p_minus) override {
        return rng_.uniform() < p_minus;
    }

   private:
    Rng &rng_;
};

/// Replays a fixed list of outcomes for exhaustive branch enumeration.
/// Requests beyond the end of the script return false and are counted.
class ScriptedOutcomes : public OutcomeSource {
   public:
    explicit ScriptedOutcomes(std::vector<bool> script) : script_(std::move(script)) {
    }
    bool draw(double) override {
        size_t k = consumed_++;
        return k < script_.size() ? script_[k] : false;
    }
    size_t consumed() const {
        return consumed_;
    }

   private:
    std::vector<bool> script_;
    size_t consumed_ = 0;
};

}  // namespace distqec

#endif

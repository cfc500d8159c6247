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

#ifndef ZLD_FRAME_SIM_H
#define ZLD_FRAME_SIM_H

#include <cstdint>
#include <vector>

#include "zld/circuit.h"
#include "zld/code_spec.h"
#include "zld/noise.h"
#include "zld/tableau.h"

namespace zld {

/// Pauli-frame propagation of up to 64 shots at once, bit k of every word
/// belonging to shot k. Records are reported as flips relative to the
/// noiseless reference.
struct BatchResult {
    size_t shots = 0;
    std::vector<uint64_t> flips;
    std::vector<uint64_t> fx;
    std::vector<uint64_t> fz;
    /// Shots whose frame reached an A or Adg gate under Variant::Pi8. Their
    /// frames past that point are not meaningful.
    uint64_t nonclifford_hits = 0;
};

class FrameSimulator {
   public:
    FrameSimulator(const Circuit &c, Variant v, std::vector<FaultLocation> locs);

    BatchResult run_batch(const std::vector<const FaultSample *> &shots) const;

    const std::vector<FaultLocation> &locations() const {
        return locs_;
    }
    const Circuit &circuit() const {
        return *c_;
    }

   private:
    const Circuit *c_;
    Variant v_;
    std::vector<FaultLocation> locs_;
};

struct ShotVerdict {
    bool accepted = true;
    /// Index into Circuit::checks of the first failing check in stage order.
    int rejecting_check = -1;
    int rejecting_stage = -1;
    bool logical_error = false;
    /// Accepted with a residual error that leaves the code space.
    bool outside_codespace = false;
};

/// Turns frame results into verdicts for a protocol whose output lives on
/// `target`. With `magic_output` a residual logical X, Y or Z is an error
/// (the ideal output is a non-stabilizer state); otherwise only residuals
/// that anticommute with logical Z count.
class VerdictEvaluator {
   public:
    VerdictEvaluator(const Circuit &c, const PlacedCode &target, bool magic_output);

    /// Per-shot masks for one batch.
    void evaluate(const BatchResult &r, std::vector<ShotVerdict> &out) const;
    /// Shots with at least one failing check.
    uint64_t rejected_mask(const BatchResult &r) const;

   private:
    struct Term {
        uint32_t qubit;
        bool use_x;
        bool use_z;
    };
    uint64_t anticommute(const std::vector<Term> &op, const BatchResult &r) const;

    const Circuit *c_;
    std::vector<const AcceptanceCheck *> ordered_;
    std::vector<int> ordered_index_;
    std::vector<std::vector<Term>> stabs_;
    std::vector<Term> lx_;
    std::vector<Term> lz_;
    bool magic_;
};

}  // namespace zld

#endif

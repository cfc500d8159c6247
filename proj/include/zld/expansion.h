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

#ifndef ZLD_EXPANSION_H
#define ZLD_EXPANSION_H

#include <string>
#include <string_view>
#include <vector>

#include "zld/analysis.h"
#include "zld/decoder.h"
#include "zld/frame_sim.h"
#include "zld/protocols.h"

namespace zld {

constexpr int kStageExpansion = 3;

enum class ExpansionMode { Detection, Correction };

const char *expansion_mode_name(ExpansionMode m);
/// "detection" or "correction"; throws std::invalid_argument otherwise.
ExpansionMode parse_expansion_mode(std::string_view s);

/// A distillation protocol followed by growth of its distance-3 output to
/// distance d_to. `protocol.target` is the grown code.
struct Expansion {
    Protocol protocol;
    int d_from = 3;
    int d_to = 5;
    ExpansionMode mode = ExpansionMode::Detection;
    size_t rounds = 0;
    /// Record slots of every round, one list per Z (resp. X) plaquette of
    /// protocol.target, in the order of plaquettes_of_type.
    std::vector<std::vector<uint32_t>> z_rounds;
    std::vector<std::vector<uint32_t>> x_rounds;
    /// Code positions of each Z plaquette and the CNOT step (0..3) at which
    /// its round touches each of them.
    std::vector<std::vector<uint32_t>> z_support;
    std::vector<std::vector<int>> z_step;
};

/// Grows the output of "rotated" or "conversion" to d_to in {5, 7}. New data
/// qubits sharing the rows of the old patch start in |0>, the rest in |+>;
/// then `rounds` rounds of every plaquette (0 selects d_to). Detection mode
/// adds checks rejecting any nontrivial or inconsistent expansion syndrome;
/// correction mode adds none.
Expansion build_expansion(std::string_view protocol, int d_to, ExpansionMode mode, size_t rounds = 0);

/// Verdicts for the Clifford variant of an expansion circuit. Acceptance
/// follows the circuit's checks. In detection mode the output is judged like
/// an unexpanded protocol. In correction mode the Z-plaquette records and
/// the final frame are decoded on a space-time matching graph and the
/// residual is compared with logical Z.
class ExpansionEvaluator {
   public:
    explicit ExpansionEvaluator(const Expansion &e);

    void evaluate(const BatchResult &r, std::vector<ShotVerdict> &out) const;

    /// Detector flips of shot `shot` (layer-major), for tracing.
    std::vector<int32_t> defects(const BatchResult &r, size_t shot) const;
    /// Data qubits (code positions) flipped by the decoder for `defects`.
    std::vector<int32_t> correction(const std::vector<int32_t> &defects) const;

   private:
    struct Detector {
        /// Record slots whose flip parity forms the detector.
        std::vector<uint32_t> slots;
        /// Plaquette index whose final-frame syndrome joins the parity, or -1.
        int final_plaquette = -1;
    };

    const Expansion *e_;
    VerdictEvaluator base_;
    std::vector<Detector> detectors_;
    MatchingGraph graph_;
    /// Circuit qubits of each Z plaquette.
    std::vector<std::vector<uint32_t>> z_support_;
    /// Code positions and circuit qubits of the logical Z representative.
    std::vector<uint8_t> in_lz_;
    std::vector<uint32_t> lz_;
};

}  // namespace zld

#endif

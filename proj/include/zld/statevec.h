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

#ifndef ZLD_STATEVEC_H
#define ZLD_STATEVEC_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "zld/circuit.h"
#include "zld/code_spec.h"
#include "zld/kernels.h"
#include "zld/noise.h"
#include "zld/pauli.h"
#include "zld/schedule.h"
#include "zld/tableau.h"

namespace zld {

using Mat2 = std::array<cplx, 4>;

/// Matrix of a single-qubit unitary gate. A is e^{-i theta Y} with theta =
/// pi/8 (Variant::Pi8) or pi/4 (Variant::Pi4); Adg its inverse.
Mat2 gate_matrix(GateKind k, Variant v);
/// 'X', 'Y' or 'Z'.
Mat2 pauli_matrix(char letter);

/// Dense state of the live simulator qubits. Positions run 0..live()-1;
/// removing a qubit shifts the positions above it down by one.
class StateVector {
   public:
    explicit StateVector(size_t cap, const KernelTable *k = nullptr);

    size_t live() const {
        return live_;
    }
    size_t cap() const {
        return cap_;
    }
    /// Appends a qubit in |0> at position live()-1. Throws on slot exhaustion.
    uint32_t add_qubit();
    void apply(uint32_t pos, const Mat2 &m);
    void cnot(uint32_t control, uint32_t target);
    double prob_one(uint32_t pos) const;
    /// Z measurement followed by removal of the qubit. The outcome is 1 when
    /// u < Pr(1), for a Born-random measurement, with `flip` inverting that
    /// choice. `random` reports whether both outcomes had weight.
    bool measure_remove(uint32_t pos, double u, bool flip, bool *random);
    /// Same choice as measure_remove, but the qubit stays, reset to |0>.
    bool measure_reset(uint32_t pos, double u, bool flip, bool *random);
    double norm2() const;

    const std::vector<cplx> &amplitudes() const {
        return amp_;
    }
    std::vector<cplx> &amplitudes() {
        return amp_;
    }

   private:
    size_t cap_;
    size_t live_ = 0;
    const KernelTable *k_;
    std::vector<cplx> amp_;
};

/// Applies a Pauli string over `n` qubits (qubit q at bit q) to `amp`, sign
/// included.
void apply_pauli_dense(std::vector<cplx> &amp, const PauliString &p);

struct Projection {
    double norm2 = 0;
    double fidelity = 0;
};

/// Projects `amp` (over the code's qubits in layout order) onto the code
/// space and compares with alpha|0_L> + beta|1_L>, where |0_L> is the
/// projected |0...0> and |1_L> = X_L|0_L>.
Projection project_codespace(const std::vector<cplx> &amp, const CodeSpec &code, cplx alpha, cplx beta);

/// Logical amplitudes of the distilled state Adg|+>.
void ideal_magic(Variant v, cplx &alpha, cplx &beta);

struct StatevecOptions {
    Variant variant = Variant::Pi8;
    size_t cap = 23;
    bool reuse = true;
    /// Invert the Born choice at every random measurement.
    bool flip_random = false;
    const KernelTable *kernels = nullptr;
};

struct ShotResult {
    bool accepted = true;
    int rejecting_check = -1;
    std::string rejecting_name;
    double fidelity = 0;
    bool logical_error = false;
    /// Accepted, but the projection onto the code space vanished.
    bool outside_codespace = false;
    std::vector<uint8_t> record;
};

/// A circuit prepared for repeated state-vector shots.
class StatevecRunner {
   public:
    StatevecRunner(const Circuit &c, const PlacedCode &target, std::vector<FaultLocation> locs,
                   StatevecOptions opt);

    ShotResult run(const FaultSample &faults, uint64_t seed) const;

    size_t peak_width() const {
        return sched_.peak;
    }
    const std::vector<FaultLocation> &locations() const {
        return locs_;
    }

   private:
    const Circuit *c_;
    PlacedCode target_;
    std::vector<FaultLocation> locs_;
    StatevecOptions opt_;
    Schedule sched_;
    std::vector<const AcceptanceCheck *> ordered_;
    /// Schedule position after which every slot of ordered_[k] is written.
    std::vector<size_t> check_ready_;
    cplx alpha_;
    cplx beta_;
};

}  // namespace zld

#endif

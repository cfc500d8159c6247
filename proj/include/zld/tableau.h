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

#ifndef ZLD_TABLEAU_H
#define ZLD_TABLEAU_H

#include <cstdint>
#include <vector>

#include "zld/circuit.h"
#include "zld/noise.h"
#include "zld/pauli.h"
#include "zld/rng.h"

namespace zld {

/// Which rotation angle the A / Adg gates denote.
enum class Variant : uint8_t { Pi8, Pi4 };

/// Aaronson-Gottesman stabilizer tableau with destabilizers. Rows 0..n-1 are
/// destabilizers, rows n..2n-1 stabilizers. Starts in |0...0>.
class Tableau {
   public:
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }

    void h(size_t q);
    void s(size_t q);
    void sdg(size_t q);
    void x(size_t q);
    void y(size_t q);
    void z(size_t q);
    /// e^{-i pi/4 Y}: X -> -Z, Z -> X.
    void sqrt_y(size_t q);
    /// e^{+i pi/4 Y}: X -> Z, Z -> -X.
    void sqrt_y_dag(size_t q);
    void cnot(size_t control, size_t target);

    struct Outcome {
        bool value = false;
        bool random = false;
    };
    /// Measures Z_q. Random outcomes take `forced` when it is 0 or 1 and are
    /// drawn from `rng` otherwise (rng may be null only when forced >= 0).
    Outcome measure_z(size_t q, int forced, Rng *rng);
    Outcome measure_x(size_t q, int forced, Rng *rng);
    void reset_z(size_t q, Rng *rng);
    void reset_x(size_t q, Rng *rng);

    /// +1 or -1 when the observable is determined by the state, 0 otherwise.
    int peek(const PauliString &observable) const;

    const PauliString &stabilizer(size_t k) const {
        return rows_[n_ + k];
    }

   private:
    size_t n_;
    std::vector<PauliString> rows_;
};

/// Applies one non-measurement, non-CPauli gate of a Clifford circuit.
/// Throws std::invalid_argument for A/Adg under Variant::Pi8.
void apply_clifford_gate(Tableau &t, const Gate &g, Variant v);

struct TableauRun {
    std::vector<uint8_t> record;
    /// 1 where the measurement outcome was not determined by the state.
    std::vector<uint8_t> random;
    Tableau state{0};
};

/// Runs a Clifford circuit from |0...0>. Random outcome of slot k is
/// forced[k] when `forced` is given and forced[k] >= 0, otherwise drawn from
/// `rng`. Optional Pauli faults are injected as described on FaultLocation.
TableauRun run_tableau(const Circuit &c, Variant v, const std::vector<int8_t> *forced, Rng *rng,
                       const FaultSample *faults = nullptr, const std::vector<FaultLocation> *locs = nullptr);

}  // namespace zld

#endif

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

#ifndef ZLD_DECODER_H
#define ZLD_DECODER_H

#include <cstdint>
#include <vector>

#include "zld/code_spec.h"
#include "zld/pauli.h"

namespace zld {

/// Unit-weight graph whose nodes are detectors. An edge either joins two
/// detectors or one detector and the boundary, and may carry a data qubit
/// that the correction flips when the edge is used.
class MatchingGraph {
   public:
    static constexpr int32_t kBoundary = -1;
    static constexpr int32_t kNoQubit = -1;

    explicit MatchingGraph(size_t num_nodes);

    void add_edge(int32_t a, int32_t b, int32_t qubit);
    size_t num_nodes() const {
        return adj_.size();
    }

    /// Minimum-weight matching of `defects` among themselves and the
    /// boundary. Returns the data qubits flipped an odd number of times,
    /// sorted. Exhaustive for up to kExhaustiveLimit defects, greedy beyond.
    std::vector<int32_t> match(const std::vector<int32_t> &defects) const;

    static constexpr size_t kExhaustiveLimit = 18;

   private:
    struct Edge {
        int32_t to;
        int32_t qubit;
    };
    struct Paths {
        std::vector<int32_t> dist;
        std::vector<int32_t> parent_edge_qubit;
        std::vector<int32_t> parent;
        int32_t boundary_dist = -1;
        int32_t boundary_via = -1;
        int32_t boundary_qubit = kNoQubit;
    };
    Paths bfs(int32_t src) const;
    void trace(const Paths &p, int32_t node, std::vector<int32_t> &flips) const;

    std::vector<std::vector<Edge>> adj_;
};

/// Which checks a decoder instance corrects against: the Z-type checks find
/// X errors and vice versa.
enum class CheckType { X, Z };

/// Code-capacity decoder of one Pauli type for a CSS code given as a
/// CodeSpec (each qubit in at most two checks of the type).
class Decoder {
   public:
    Decoder(const CodeSpec &code, CheckType type);

    /// Syndrome bits over the checks of this type, in the order of
    /// check_indices(). Returns the correction as a PauliString of the
    /// opposite type.
    PauliString decode(const std::vector<uint8_t> &syndrome) const;
    const std::vector<size_t> &check_indices() const {
        return checks_;
    }

   private:
    const CodeSpec *code_;
    CheckType type_;
    std::vector<size_t> checks_;
    MatchingGraph graph_;
};

/// Both decoders; the result of decode() clears every syndrome bit.
PauliString decode_syndrome(const CodeSpec &code, const std::vector<uint8_t> &syndrome);

/// Stabilizer syndrome of a Pauli error, one bit per stabilizer.
std::vector<uint8_t> syndrome_of(const CodeSpec &code, const PauliString &error);

}  // namespace zld

#endif

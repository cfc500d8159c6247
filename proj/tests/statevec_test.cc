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

#include <cmath>

#include "doctest.h"
#include "zld/protocols.h"
#include "zld/rng.h"
#include "zld/statevec.h"

using namespace zld;

TEST_CASE("hadamard and cnot build a bell state") {
    StateVector sv(4);
    uint32_t a = sv.add_qubit();
    uint32_t b = sv.add_qubit();
    sv.apply(a, gate_matrix(GateKind::H, Variant::Pi4));
    sv.cnot(a, b);
    const auto &amp = sv.amplitudes();
    double r = std::sqrt(0.5);
    CHECK(std::abs(amp[0] - cplx(r, 0)) < 1e-12);
    CHECK(std::abs(amp[3] - cplx(r, 0)) < 1e-12);
    CHECK(std::abs(amp[1]) < 1e-12);
    CHECK(std::abs(amp[2]) < 1e-12);
    CHECK(sv.prob_one(b) == doctest::Approx(0.5));
    bool random = false;
    bool v = sv.measure_remove(a, 0.25, false, &random);
    CHECK(random);
    CHECK(sv.live() == 1);
    CHECK(sv.prob_one(0) == doctest::Approx(v ? 1.0 : 0.0));
    CHECK(sv.norm2() == doctest::Approx(1.0));
}

TEST_CASE("flip inverts the Born choice") {
    for (bool flip : {false, true}) {
        StateVector sv(2);
        uint32_t a = sv.add_qubit();
        sv.apply(a, gate_matrix(GateKind::H, Variant::Pi4));
        bool random = false;
        bool v = sv.measure_reset(a, 0.1, flip, &random);
        CHECK(random);
        CHECK(v == !flip);
        CHECK(sv.prob_one(a) == doctest::Approx(0.0));
    }
}

TEST_CASE("deterministic measurement ignores flip") {
    StateVector sv(2);
    uint32_t a = sv.add_qubit();
    sv.apply(a, pauli_matrix('X'));
    bool random = true;
    CHECK(sv.measure_remove(a, 0.9, true, &random));
    CHECK_FALSE(random);
}

TEST_CASE("A gate produces the magic state") {
    for (Variant v : {Variant::Pi8, Variant::Pi4}) {
        cplx alpha;
        cplx beta;
        ideal_magic(v, alpha, beta);
        StateVector sv(1);
        uint32_t q = sv.add_qubit();
        sv.apply(q, gate_matrix(GateKind::H, v));
        sv.apply(q, gate_matrix(GateKind::Adg, v));
        const auto &amp = sv.amplitudes();
        double overlap = std::norm(std::conj(alpha) * amp[0] + std::conj(beta) * amp[1]);
        CHECK(overlap == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("A and Adg are inverse") {
    for (Variant v : {Variant::Pi8, Variant::Pi4}) {
        Mat2 a = gate_matrix(GateKind::A, v);
        Mat2 d = gate_matrix(GateKind::Adg, v);
        cplx p00 = a[0] * d[0] + a[1] * d[2];
        cplx p01 = a[0] * d[1] + a[1] * d[3];
        CHECK(std::abs(p00 - cplx(1, 0)) < 1e-12);
        CHECK(std::abs(p01) < 1e-12);
    }
}

TEST_CASE("noiseless protocols output the exact magic state") {
    for (const std::string name : {"rotated", "conversion"}) {
        Protocol p = build_protocol(name);
        for (Variant v : {Variant::Pi8, Variant::Pi4}) {
            StatevecOptions opt;
            opt.variant = v;
            StatevecRunner r(p.circuit, p.target, enumerate_locations(p.circuit, NoiseModel{}), opt);
            for (uint64_t s = 0; s < 2; s++) {
                ShotResult res = r.run(FaultSample{}, s);
                CHECK(res.accepted);
                CHECK(1 - res.fidelity < 1e-9);
                CHECK_FALSE(res.logical_error);
            }
        }
    }
}

TEST_CASE("slot reuse is transparent") {
    CircuitBuilder b;
    detail::Prefix pre = detail::add_prefix(b, 0, false, true);
    Circuit c = b.build();
    PlacedCode target = place_code(detail::prefix_steane_code(c, pre), c);
    auto locs = enumerate_locations(c, NoiseModel{});
    StatevecOptions with;
    StatevecOptions without;
    without.reuse = false;
    without.cap = c.num_qubits();
    StatevecRunner a(c, target, locs, with);
    StatevecRunner bare(c, target, locs, without);
    CHECK(a.peak_width() < c.num_qubits());
    NoiseModel m;
    m.p = 0.02;
    for (uint64_t s = 0; s < 60; s++) {
        FaultSample f = sample_faults(locs, m, shot_seed(4, s));
        ShotResult x = a.run(f, s);
        ShotResult y = bare.run(f, s);
        // Reuse reorders gates, so individual correlated outcomes may land on
        // other slots; verdicts and fidelity may not change.
        CHECK(x.record.size() == y.record.size());
        CHECK(x.accepted == y.accepted);
        CHECK(x.logical_error == y.logical_error);
        CHECK(x.fidelity == doctest::Approx(y.fidelity).epsilon(1e-9));
    }
}

TEST_CASE("noisy runs are reproducible for a seed") {
    Protocol p = build_protocol("conversion");
    auto locs = enumerate_locations(p.circuit, NoiseModel{});
    StatevecRunner r(p.circuit, p.target, locs, StatevecOptions{});
    NoiseModel m;
    m.p = 0.01;
    for (uint64_t s = 0; s < 20; s++) {
        ShotResult res = r.run(sample_faults(locs, m, s), s);
        ShotResult again = r.run(sample_faults(locs, m, s), s);
        CHECK(res.record == again.record);
        CHECK(res.fidelity == again.fidelity);
    }
}

TEST_CASE("norm is preserved by random circuits") {
    Rng rng(17);
    StateVector sv(10);
    for (int q = 0; q < 10; q++) {
        sv.add_qubit();
    }
    const GateKind kinds[] = {GateKind::H, GateKind::S, GateKind::A, GateKind::Adg, GateKind::Y};
    for (int step = 0; step < 400; step++) {
        uint32_t q = (uint32_t)rng.below(10);
        if (rng.coin()) {
            uint32_t t = (uint32_t)rng.below(9);
            sv.cnot(q, t >= q ? t + 1 : t);
        } else {
            sv.apply(q, gate_matrix(kinds[rng.below(5)], Variant::Pi8));
        }
    }
    CHECK(std::abs(sv.norm2() - 1) < 1e-10);
    bool random = false;
    sv.measure_reset(3, rng.uniform(), false, &random);
    CHECK(std::abs(sv.norm2() - 1) < 1e-10);
}

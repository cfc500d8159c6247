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
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "zld/harness.h"
#include "zld/rng.h"

using namespace zld;

namespace {

SweepPoint synthetic(double a, double p, uint64_t accepted, Rng &rng) {
    SweepPoint pt;
    pt.protocol = "rotated";
    pt.backend = "tableau";
    pt.variant = "pi4";
    pt.p = p;
    pt.shots = accepted * 2;
    pt.accepted = accepted;
    double q = a * p * p;
    for (uint64_t k = 0; k < accepted; k++) {
        pt.logical_errors += rng.uniform() < q;
    }
    return pt;
}

}  // namespace

TEST_CASE("wilson interval") {
    Interval i = wilson_interval(0, 100);
    CHECK(i.lo == 0);
    CHECK(i.hi == doctest::Approx(0.037).epsilon(0.01));
    Interval all = wilson_interval(50, 50);
    CHECK(all.hi == 1);
    Interval mid = wilson_interval(50, 100);
    CHECK(mid.lo == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(mid.hi == doctest::Approx(0.5962).epsilon(1e-3));
    Interval none = wilson_interval(0, 0);
    CHECK(none.lo == 0);
    CHECK(none.hi == 1);
}

TEST_CASE("wilson coverage near nominal") {
    Rng rng(8);
    const double q = 0.03;
    const uint64_t n = 400;
    int covered = 0;
    const int trials = 2000;
    for (int t = 0; t < trials; t++) {
        uint64_t k = 0;
        for (uint64_t j = 0; j < n; j++) {
            k += rng.uniform() < q;
        }
        Interval i = wilson_interval(k, n);
        covered += i.lo <= q && q <= i.hi;
    }
    double rate = (double)covered / trials;
    CHECK(rate > 0.92);
    CHECK(rate < 0.98);
}

TEST_CASE("fit recovers a synthetic quadratic") {
    Rng rng(21);
    std::vector<SweepPoint> pts;
    for (double p : {1e-3, 3e-3, 1e-2}) {
        pts.push_back(synthetic(100, p, 400000, rng));
    }
    FitResult f = fit_quadratic(pts);
    CHECK(f.points_used == 3);
    CHECK(f.a_ci.lo <= 100);
    CHECK(f.a_ci.hi >= 100);
    CHECK(std::abs(f.b - 2) < 3 * f.b_se + 0.05);
    CHECK(f.residuals.size() == 3);
}

TEST_CASE("fit rejects thin statistics") {
    Rng rng(1);
    std::vector<SweepPoint> pts;
    for (double p : {1e-4, 3e-4, 1e-3}) {
        pts.push_back(synthetic(100, p, 1000, rng));
    }
    CHECK_THROWS_AS(fit_quadratic(pts), std::invalid_argument);
}

TEST_CASE("csv round trip and json mirror") {
    Rng rng(2);
    std::vector<SweepPoint> pts{synthetic(100, 3e-3, 5000, rng), synthetic(100, 1e-2, 5000, rng)};
    pts[1].seed = 12345678901234ULL;
    std::stringstream ss;
    ss << kCsvHeader << "\n";
    for (const auto &pt : pts) {
        ss << csv_row(pt) << "\n";
    }
    auto back = read_csv(ss);
    REQUIRE(back.size() == 2);
    for (size_t k = 0; k < 2; k++) {
        CHECK(back[k].protocol == pts[k].protocol);
        CHECK(back[k].p == pts[k].p);
        CHECK(back[k].shots == pts[k].shots);
        CHECK(back[k].accepted == pts[k].accepted);
        CHECK(back[k].logical_errors == pts[k].logical_errors);
        CHECK(back[k].seed == pts[k].seed);
    }
    auto j = nlohmann::json::parse(points_json(pts));
    REQUIRE(j.size() == 2);
    CHECK(j[0].size() == 14);
    CHECK(j[1]["seed"].get<uint64_t>() == pts[1].seed);

    std::stringstream bad("protocol,backend\nx,y\n");
    CHECK_THROWS_AS(read_csv(bad), std::runtime_error);
    std::stringstream short_row(std::string(kCsvHeader) + "\nrotated,tableau\n");
    CHECK_THROWS_AS(read_csv(short_row), std::runtime_error);
}

TEST_CASE("config errors name the field") {
    auto field_of = [](RunConfig cfg) {
        try {
            Experiment e(cfg);
        } catch (const ConfigError &e) {
            return e.field();
        }
        return std::string();
    };
    RunConfig pi8;
    pi8.variant = Variant::Pi8;
    CHECK(field_of(pi8) == "backend");
    RunConfig proto;
    proto.protocol = "hexagon";
    CHECK(field_of(proto) == "protocol");
    RunConfig threads;
    threads.threads = 0;
    CHECK(field_of(threads) == "threads");
    RunConfig expand;
    expand.expand_to = 9;
    CHECK(field_of(expand) == "expand");
    RunConfig drop;
    drop.drop_checks = {"nope"};
    CHECK(field_of(drop) == "drop-check");
    CHECK_THROWS_AS(parse_variant("pi16"), ConfigError);
    Experiment e(RunConfig{});
    try {
        estimate(e, -0.1, 10, 1);
        FAIL("expected ConfigError");
    } catch (const ConfigError &err) {
        CHECK(err.field() == "p");
    }
}

TEST_CASE("noiseless estimate accepts every shot") {
    Experiment e(RunConfig{});
    SweepPoint pt = estimate(e, 0, 1000, 3);
    CHECK(pt.accepted == 1000);
    CHECK(pt.logical_errors == 0);
    CHECK(pt.success() == 1);
}

TEST_CASE("estimates do not depend on the thread count") {
    RunConfig one;
    one.protocol = "conversion";
    RunConfig four = one;
    four.threads = 4;
    Experiment a(one);
    Experiment b(four);
    for (double p : {1e-3, 1e-2}) {
        SweepPoint x = estimate(a, p, 3000, 99);
        SweepPoint y = estimate(b, p, 3000, 99);
        CHECK(csv_row(x) == csv_row(y));
    }
    SweepPoint x = estimate(a, 1e-2, 3000, 99);
    SweepPoint z = estimate(a, 1e-2, 3000, 100);
    CHECK(csv_row(x) != csv_row(z));
}

TEST_CASE("single-fault check is clean and catches the dropped hadamard test") {
    for (const auto &name : protocol_names()) {
        RunConfig cfg;
        cfg.protocol = name;
        Experiment e(cfg);
        SingleFaultReport r = check_single_faults(e);
        CHECK(r.violations.empty());
        CHECK(r.error_fraction == 0);
        CHECK(r.faults > r.locations);
        cfg.drop_checks = {"hadamard-test"};
        Experiment m(cfg);
        CHECK_FALSE(check_single_faults(m).violations.empty());
    }
}

TEST_CASE("hybrid statevec check on the magic variant") {
    RunConfig cfg;
    cfg.protocol = "conversion";
    cfg.backend = Backend::Statevec;
    cfg.variant = Variant::Pi8;
    Experiment e(cfg);
    SingleFaultReport r = check_single_faults(e);
    CHECK(r.violations.empty());
    CHECK(r.statevec_runs > 0);
    CHECK(r.frame_verdicts > 0);
}

TEST_CASE("trace emits one json object per faulty shot") {
    Experiment e(RunConfig{});
    std::stringstream ss;
    SweepPoint pt = estimate(e, 5e-3, 200, 4, &ss);
    std::string line;
    size_t n = 0;
    while (std::getline(ss, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("faults"));
        CHECK(j.contains("accepted"));
        CHECK(j.contains("record_flips"));
        n++;
    }
    CHECK(n > 0);
    CHECK(n <= pt.shots);
}

TEST_CASE("stratified estimate is consistent with its pieces") {
    Experiment e(RunConfig{});
    StratifiedEstimate s = stratified_estimate(e, 20000, 5);
    CHECK(s.q1 == 0);
    CHECK(s.a > 0);
    CHECK(s.a_ci.lo <= s.a);
    CHECK(s.a_ci.hi >= s.a);
    double n = (double)s.locations;
    CHECK(s.a == doctest::Approx(n * (n - 1) / 2 * s.q2));
    CHECK(s.p_L(1e-4) == doctest::Approx(s.a * 1e-8).epsilon(0.05));
    CHECK(s.success(0) == 1);
}

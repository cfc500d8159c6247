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

#include "zld/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "zld/rng.h"
#include "zld/schedule.h"

namespace zld {

namespace {

constexpr size_t kChunk = 64;
constexpr uint64_t kBornSalt = 0xB0B1A5EDULL;

struct Counts {
    uint64_t accepted = 0;
    uint64_t errors = 0;
};

/// Runs fn(chunk) for every chunk on up to `threads` workers and sums the
/// counts in chunk order.
template <typename Fn>
Counts parallel_chunks(size_t chunks, unsigned threads, Fn fn) {
    std::vector<Counts> per(chunks);
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&]() {
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= chunks) {
                return;
            }
            try {
                per[k] = fn(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(chunks);
                return;
            }
        }
    };
    unsigned n = (unsigned)std::min<size_t>(std::max(1u, threads), std::max<size_t>(chunks, 1));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    Counts total;
    for (const Counts &c : per) {
        total.accepted += c.accepted;
        total.errors += c.errors;
    }
    return total;
}

std::string describe_location(const Circuit &c, const FaultLocation &loc, uint8_t pauli) {
    static const char *kinds[] = {"gate1", "gate2", "idle", "prep", "meas"};
    std::string out = "moment " + std::to_string(loc.moment) + " " + kinds[(int)loc.kind] + " " +
                      qubit_text(c.layout[loc.q0]);
    if (loc.two_qubit()) {
        out += "," + qubit_text(c.layout[loc.q1]);
    }
    out += " ";
    out += pauli_letter(pauli & 3);
    if (loc.two_qubit()) {
        out += pauli_letter(pauli >> 2);
    }
    return out;
}

}  // namespace

const char *backend_name(Backend b) {
    return b == Backend::Tableau ? "tableau" : "statevec";
}

const char *variant_name(Variant v) {
    return v == Variant::Pi8 ? "pi8" : "pi4";
}

Backend parse_backend(std::string_view s) {
    if (s == "tableau") {
        return Backend::Tableau;
    }
    if (s == "statevec") {
        return Backend::Statevec;
    }
    throw ConfigError("backend", "unknown backend '" + std::string(s) + "' (expected tableau or statevec)");
}

Variant parse_variant(std::string_view s) {
    if (s == "pi8") {
        return Variant::Pi8;
    }
    if (s == "pi4") {
        return Variant::Pi4;
    }
    throw ConfigError("variant", "unknown variant '" + std::string(s) + "' (expected pi8 or pi4)");
}

Experiment::Experiment(const RunConfig &cfg) : cfg_(cfg) {
    auto names = protocol_names();
    if (std::find(names.begin(), names.end(), cfg.protocol) == names.end()) {
        throw ConfigError("protocol",
                          "unknown protocol '" + cfg.protocol + "' (expected rotated, planar or conversion)");
    }
    if (cfg.variant == Variant::Pi8 && cfg.backend == Backend::Tableau) {
        throw ConfigError("backend", "the pi8 variant is not Clifford; use the statevec backend");
    }
    if (cfg.threads == 0) {
        throw ConfigError("threads", "must be at least 1");
    }
    if (cfg.expand_to != 0) {
        if (cfg.expand_to != 5 && cfg.expand_to != 7) {
            throw ConfigError("expand", "distance must be 5 or 7, got " + std::to_string(cfg.expand_to));
        }
        if (cfg.protocol == "planar") {
            throw ConfigError("protocol", "expansion supports the rotated and conversion outputs only");
        }
        expansion_.emplace(build_expansion(cfg.protocol, cfg.expand_to, cfg.mode, cfg.rounds));
        name_ = expansion_->protocol.name;
    } else {
        if (cfg.rounds != 0) {
            throw ConfigError("rounds", "only meaningful with an expansion");
        }
        protocol_.emplace(build_protocol(cfg.protocol));
        name_ = protocol_->name;
    }
    Circuit &c = expansion_ ? expansion_->protocol.circuit : protocol_->circuit;
    for (const auto &drop : cfg.drop_checks) {
        auto it = std::find_if(c.checks.begin(), c.checks.end(),
                               [&](const AcceptanceCheck &chk) { return chk.name == drop; });
        if (it == c.checks.end()) {
            throw ConfigError("drop-check", "no check named '" + drop + "'");
        }
        c.checks.erase(it);
    }

    locs_ = enumerate_locations(c, NoiseModel{});
    frames_ = std::make_unique<FrameSimulator>(c, cfg.variant, locs_);
    if (expansion_) {
        expansion_verdicts_ = std::make_unique<ExpansionEvaluator>(*expansion_);
    } else {
        verdicts_ = std::make_unique<VerdictEvaluator>(c, target(), cfg.variant == Variant::Pi8);
    }
    if (cfg.backend == Backend::Statevec) {
        StatevecOptions opt;
        opt.variant = cfg.variant;
        size_t peak = schedule_circuit(c, opt.reuse).peak;
        if (peak > opt.cap) {
            throw ConfigError("backend", "circuit needs " + std::to_string(peak) + " live qubits; statevec allows " +
                                             std::to_string(opt.cap) + " (use the tableau backend)");
        }
        sv_ = std::make_unique<StatevecRunner>(c, target(), locs_, opt);
        opt.flip_random = true;
        sv_flip_ = std::make_unique<StatevecRunner>(c, target(), locs_, opt);
    }
}

Experiment::~Experiment() = default;

const Circuit &Experiment::circuit() const {
    return expansion_ ? expansion_->protocol.circuit : protocol_->circuit;
}

const PlacedCode &Experiment::target() const {
    return expansion_ ? expansion_->protocol.target : protocol_->target;
}

size_t Experiment::peak_width() const {
    return sv_ ? sv_->peak_width() : schedule_circuit(circuit(), StatevecOptions{}.reuse).peak;
}

ShotVerdict Experiment::run_statevec(const FaultSample &f, uint64_t seed, bool flip_random) const {
    if (!sv_) {
        throw std::logic_error("run_statevec: experiment uses the tableau backend");
    }
    ShotResult r = (flip_random ? sv_flip_ : sv_)->run(f, seed);
    ShotVerdict v;
    v.accepted = r.accepted;
    v.rejecting_check = r.rejecting_check;
    v.rejecting_stage = r.rejecting_check >= 0 ? circuit().checks[(size_t)r.rejecting_check].stage : -1;
    v.logical_error = r.logical_error;
    v.outside_codespace = r.outside_codespace;
    return v;
}

void Experiment::run(const std::vector<const FaultSample *> &shots, const std::vector<uint64_t> &seeds,
                     std::vector<ShotVerdict> &out) const {
    out.assign(shots.size(), ShotVerdict{});
    if (sv_) {
        for (size_t k = 0; k < shots.size(); k++) {
            if (!shots[k]->empty()) {
                out[k] = run_statevec(*shots[k], seeds[k], false);
            }
        }
        return;
    }
    std::vector<size_t> idx;
    std::vector<const FaultSample *> batch;
    std::vector<ShotVerdict> v;
    auto flush = [&]() {
        if (batch.empty()) {
            return;
        }
        BatchResult r = frames_->run_batch(batch);
        if (expansion_verdicts_) {
            expansion_verdicts_->evaluate(r, v);
        } else {
            verdicts_->evaluate(r, v);
        }
        for (size_t j = 0; j < batch.size(); j++) {
            out[idx[j]] = v[j];
        }
        batch.clear();
        idx.clear();
    };
    for (size_t k = 0; k < shots.size(); k++) {
        if (shots[k]->empty()) {
            continue;
        }
        idx.push_back(k);
        batch.push_back(shots[k]);
        if (batch.size() == kChunk) {
            flush();
        }
    }
    flush();
}

std::string Experiment::trace(const FaultSample &f, uint64_t seed, uint64_t shot) const {
    nlohmann::json j;
    j["shot"] = shot;
    auto faults = nlohmann::json::array();
    for (const Fault &x : f.faults) {
        faults.push_back(describe_location(circuit(), locs_[x.location], x.pauli));
    }
    j["faults"] = faults;
    ShotVerdict v;
    std::string bits;
    if (sv_) {
        ShotResult r = sv_->run(f, seed);
        for (uint8_t b : r.record) {
            bits += (char)('0' + b);
        }
        j["record"] = bits;
        v = run_statevec(f, seed, false);
    } else {
        BatchResult r = frames_->run_batch({&f});
        for (uint64_t w : r.flips) {
            bits += (char)('0' + (w & 1));
        }
        // Frame backend: bits are flips relative to the noiseless record.
        j["record_flips"] = bits;
        std::vector<ShotVerdict> out;
        run({&f}, {seed}, out);
        v = out[0];
        if (expansion_verdicts_ && expansion_->mode == ExpansionMode::Correction) {
            auto d = expansion_verdicts_->defects(r, 0);
            j["defects"] = d;
            j["correction"] = expansion_verdicts_->correction(d);
        }
    }
    j["accepted"] = v.accepted;
    if (!v.accepted) {
        j["stage"] = v.rejecting_stage;
        j["check"] = circuit().checks[(size_t)v.rejecting_check].name;
    }
    j["logical_error"] = v.logical_error;
    j["outside_codespace"] = v.outside_codespace;
    return j.dump();
}

FaultSample shot_faults(const std::vector<FaultLocation> &locs, double p, uint64_t master, uint64_t shot) {
    NoiseModel m;
    m.p = p;
    return sample_faults(locs, m, shot_seed(master, shot));
}

SweepPoint estimate(const Experiment &e, double p, uint64_t shots, uint64_t seed, std::ostream *trace) {
    if (!(p >= 0 && p <= 1)) {
        throw ConfigError("p", "physical error rate must lie in [0, 1]");
    }
    size_t chunks = (size_t)((shots + kChunk - 1) / kChunk);
    auto run_chunk = [&](size_t k) {
        uint64_t lo = k * kChunk;
        uint64_t hi = std::min<uint64_t>(shots, lo + kChunk);
        std::vector<FaultSample> samples;
        std::vector<uint64_t> seeds;
        for (uint64_t s = lo; s < hi; s++) {
            samples.push_back(shot_faults(e.locations(), p, seed, s));
            seeds.push_back(shot_seed(seed ^ kBornSalt, s));
        }
        std::vector<const FaultSample *> ptrs;
        for (const auto &f : samples) {
            ptrs.push_back(&f);
        }
        std::vector<ShotVerdict> v;
        e.run(ptrs, seeds, v);
        Counts c;
        for (size_t j = 0; j < v.size(); j++) {
            c.accepted += v[j].accepted;
            c.errors += v[j].accepted && v[j].logical_error;
            if (trace && !samples[j].empty()) {
                *trace << e.trace(samples[j], seeds[j], lo + j) << "\n";
            }
        }
        return c;
    };
    Counts total = parallel_chunks(chunks, trace ? 1 : e.config().threads, run_chunk);
    SweepPoint pt;
    pt.protocol = e.name();
    pt.backend = backend_name(e.config().backend);
    pt.variant = variant_name(e.config().variant);
    pt.p = p;
    pt.shots = shots;
    pt.accepted = total.accepted;
    pt.logical_errors = total.errors;
    pt.seed = seed;
    return pt;
}

SingleFaultReport check_single_faults(const Experiment &e, bool full_statevec) {
    const auto &locs = e.locations();
    const Circuit &c = e.circuit();
    bool statevec = e.config().backend == Backend::Statevec;
    SingleFaultReport rep;
    rep.locations = locs.size();

    std::vector<FaultSample> all;
    for (uint32_t l = 0; l < locs.size(); l++) {
        for (uint32_t k = 1; k <= locs[l].num_paulis(); k++) {
            FaultSample f;
            f.faults.push_back({l, (uint8_t)k});
            all.push_back(std::move(f));
        }
    }
    rep.faults = all.size();

    std::vector<ShotVerdict> verdict(all.size());
    std::vector<uint8_t> need_statevec(all.size(), statevec && full_statevec);
    if (!(statevec && full_statevec)) {
        std::vector<uint64_t> seeds(kChunk, 0);
        std::optional<FrameSimulator> frames;
        std::optional<VerdictEvaluator> judge;
        if (statevec) {
            frames.emplace(c, e.config().variant, locs);
            judge.emplace(c, e.target(), e.config().variant == Variant::Pi8);
        }
        for (size_t i = 0; i < all.size(); i += kChunk) {
            std::vector<const FaultSample *> batch;
            for (size_t j = i; j < std::min(all.size(), i + kChunk); j++) {
                batch.push_back(&all[j]);
            }
            std::vector<ShotVerdict> tmp;
            if (statevec) {
                BatchResult r = frames->run_batch(batch);
                judge->evaluate(r, tmp);
                for (size_t j = 0; j < batch.size(); j++) {
                    need_statevec[i + j] = r.nonclifford_hits >> j & 1;
                }
            } else {
                seeds.resize(batch.size());
                e.run(batch, seeds, tmp);
            }
            std::copy(tmp.begin(), tmp.end(), verdict.begin() + (std::ptrdiff_t)i);
        }
    }

    for (size_t i = 0; i < all.size(); i++) {
        const Fault &f = all[i].faults[0];
        std::string what;
        if (need_statevec[i]) {
            for (int branch = 0; branch < 2; branch++) {
                ShotVerdict v = e.run_statevec(all[i], shot_seed(f.location, f.pauli), branch == 1);
                rep.statevec_runs++;
                if (branch == 0) {
                    verdict[i] = v;
                }
                if (v.accepted && v.logical_error) {
                    rep.violations.push_back({f.location, f.pauli, branch, describe_location(c, locs[f.location], f.pauli)});
                }
            }
        } else {
            rep.frame_verdicts++;
            if (verdict[i].accepted && verdict[i].logical_error) {
                rep.violations.push_back({f.location, f.pauli, -1, describe_location(c, locs[f.location], f.pauli)});
            }
        }
        const ShotVerdict &v = verdict[i];
        double w = 1.0 / ((double)locs.size() * locs[f.location].num_paulis());
        if (v.accepted) {
            rep.accept_fraction += w;
            if (v.logical_error) {
                rep.error_fraction += w;
            }
            rep.outside_codespace += v.outside_codespace;
        } else {
            rep.rejected++;
        }
    }
    return rep;
}

double StratifiedEstimate::p_L(double p) const {
    double n = (double)locations;
    double p1 = n * p * std::pow(1 - p, n - 1);
    double p2 = n * (n - 1) / 2 * p * p * std::pow(1 - p, n - 2);
    double s = std::pow(1 - p, n) + p1 * s1 + p2 * s2;
    return (p1 * q1 + p2 * q2) / s;
}

double StratifiedEstimate::success(double p) const {
    double n = (double)locations;
    double p1 = n * p * std::pow(1 - p, n - 1);
    double p2 = n * (n - 1) / 2 * p * p * std::pow(1 - p, n - 2);
    return std::pow(1 - p, n) + p1 * s1 + p2 * s2;
}

StratifiedEstimate stratified_estimate(const Experiment &e, uint64_t pair_samples, uint64_t seed) {
    if (pair_samples == 0) {
        throw ConfigError("pairs", "need at least one two-fault sample");
    }
    SingleFaultReport single = check_single_faults(e);
    StratifiedEstimate est;
    est.locations = e.locations().size();
    est.q1 = single.error_fraction;
    est.s1 = single.accept_fraction;
    est.pair_samples = pair_samples;
    size_t chunks = (size_t)((pair_samples + kChunk - 1) / kChunk);
    Counts total = parallel_chunks(chunks, e.config().threads, [&](size_t k) {
        uint64_t lo = k * kChunk;
        uint64_t hi = std::min<uint64_t>(pair_samples, lo + kChunk);
        std::vector<FaultSample> samples;
        std::vector<uint64_t> seeds;
        for (uint64_t s = lo; s < hi; s++) {
            samples.push_back(sample_k_faults(e.locations(), 2, shot_seed(seed, s)));
            seeds.push_back(shot_seed(seed ^ kBornSalt, s));
        }
        std::vector<const FaultSample *> ptrs;
        for (const auto &f : samples) {
            ptrs.push_back(&f);
        }
        std::vector<ShotVerdict> v;
        e.run(ptrs, seeds, v);
        Counts c;
        for (const auto &x : v) {
            c.accepted += x.accepted;
            c.errors += x.accepted && x.logical_error;
        }
        return c;
    });
    est.pair_accepted = total.accepted;
    est.pair_errors = total.errors;
    double m = (double)pair_samples;
    est.q2 = (double)total.errors / m;
    est.q2_se = std::sqrt(est.q2 * (1 - est.q2) / m);
    est.s2 = (double)total.accepted / m;
    double pairs = (double)est.locations * (double)(est.locations - 1) / 2;
    est.a = pairs * est.q2;
    Interval ci = wilson_interval(total.errors, pair_samples);
    est.a_ci = {pairs * ci.lo, pairs * ci.hi};
    return est;
}

const char *const kCsvHeader =
    "protocol,backend,variant,p,shots,accepted,logical_errors,p_L,p_L_lo,p_L_hi,success,success_lo,success_hi,seed";

std::string csv_row(const SweepPoint &pt) {
    Interval l = pt.p_L_ci();
    Interval s = pt.success_ci();
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s,%s,%s,%.6g,%llu,%llu,%llu,%.6e,%.6e,%.6e,%.6f,%.6f,%.6f,%llu",
                  pt.protocol.c_str(), pt.backend.c_str(), pt.variant.c_str(), pt.p, (unsigned long long)pt.shots,
                  (unsigned long long)pt.accepted, (unsigned long long)pt.logical_errors, pt.p_L(), l.lo, l.hi,
                  pt.success(), s.lo, s.hi, (unsigned long long)pt.seed);
    return buf;
}

std::vector<SweepPoint> read_csv(std::istream &in) {
    auto strip = [](std::string &line) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' ')) {
            line.pop_back();
        }
    };
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("csv: empty input");
    }
    strip(line);
    if (line != kCsvHeader) {
        throw std::runtime_error("csv: header mismatch: expected '" + std::string(kCsvHeader) + "'");
    }
    std::vector<SweepPoint> out;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        lineno++;
        strip(line);
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(cell);
        }
        if (f.size() != 14) {
            throw std::runtime_error("csv line " + std::to_string(lineno) + ": expected 14 fields, got " +
                                     std::to_string(f.size()));
        }
        SweepPoint pt;
        try {
            pt.protocol = f[0];
            pt.backend = f[1];
            pt.variant = f[2];
            pt.p = std::stod(f[3]);
            pt.shots = std::stoull(f[4]);
            pt.accepted = std::stoull(f[5]);
            pt.logical_errors = std::stoull(f[6]);
            pt.seed = std::stoull(f[13]);
        } catch (const std::exception &) {
            throw std::runtime_error("csv line " + std::to_string(lineno) + ": malformed number");
        }
        if (pt.accepted > pt.shots || pt.logical_errors > pt.accepted) {
            throw std::runtime_error("csv line " + std::to_string(lineno) + ": inconsistent counts");
        }
        out.push_back(pt);
    }
    return out;
}

std::string points_json(const std::vector<SweepPoint> &pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &pt : pts) {
        Interval l = pt.p_L_ci();
        Interval s = pt.success_ci();
        arr.push_back({{"protocol", pt.protocol},
                       {"backend", pt.backend},
                       {"variant", pt.variant},
                       {"p", pt.p},
                       {"shots", pt.shots},
                       {"accepted", pt.accepted},
                       {"logical_errors", pt.logical_errors},
                       {"p_L", pt.p_L()},
                       {"p_L_lo", l.lo},
                       {"p_L_hi", l.hi},
                       {"success", pt.success()},
                       {"success_lo", s.lo},
                       {"success_hi", s.hi},
                       {"seed", pt.seed}});
    }
    return arr.dump(2);
}

std::vector<double> default_p_grid() {
    return {1e-4, 3e-4, 1e-3, 3e-3, 1e-2};
}

}  // namespace zld

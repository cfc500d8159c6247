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

#ifndef ZLD_HARNESS_H
#define ZLD_HARNESS_H

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zld/expansion.h"
#include "zld/frame_sim.h"
#include "zld/noise.h"
#include "zld/protocols.h"
#include "zld/stats.h"
#include "zld/statevec.h"

namespace zld {

enum class Backend { Tableau, Statevec };

const char *backend_name(Backend b);
const char *variant_name(Variant v);

/// Invalid run configuration. `field` names the offending setting.
class ConfigError : public std::invalid_argument {
   public:
    ConfigError(std::string field, const std::string &what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {
    }
    const std::string &field() const {
        return field_;
    }

   private:
    std::string field_;
};

Backend parse_backend(std::string_view s);
/// "pi8" or "pi4".
Variant parse_variant(std::string_view s);

struct RunConfig {
    std::string protocol = "rotated";
    Backend backend = Backend::Tableau;
    Variant variant = Variant::Pi4;
    /// 0 for no expansion, otherwise 5 or 7.
    int expand_to = 0;
    ExpansionMode mode = ExpansionMode::Detection;
    /// Expansion rounds; 0 selects the target distance.
    size_t rounds = 0;
    /// Circuit edit: checks with these names are dropped before running.
    std::vector<std::string> drop_checks;
    unsigned threads = 1;
};

/// A built circuit with its simulator, ready for repeated shots. Throws
/// ConfigError on incompatible settings.
class Experiment {
   public:
    explicit Experiment(const RunConfig &cfg);
    ~Experiment();
    Experiment(const Experiment &) = delete;
    Experiment &operator=(const Experiment &) = delete;

    const RunConfig &config() const {
        return cfg_;
    }
    const std::string &name() const {
        return name_;
    }
    const Circuit &circuit() const;
    const PlacedCode &target() const;
    const std::vector<FaultLocation> &locations() const {
        return locs_;
    }
    /// Peak live qubits under the state-vector slot schedule.
    size_t peak_width() const;

    /// Verdicts for `shots`; shot k uses `seeds[k]` for Born sampling on the
    /// state-vector backend. Empty samples are accepted without simulation.
    void run(const std::vector<const FaultSample *> &shots, const std::vector<uint64_t> &seeds,
             std::vector<ShotVerdict> &out) const;

    /// One JSON object per shot: faults, record bits, rejecting stage and
    /// check, verdict, and in correction mode the decoder's defects and
    /// correction.
    std::string trace(const FaultSample &f, uint64_t seed, uint64_t shot) const;

    /// Runs the state-vector backend (when configured) with the Born choice
    /// at every random measurement inverted.
    ShotVerdict run_statevec(const FaultSample &f, uint64_t seed, bool flip_random) const;

   private:
    RunConfig cfg_;
    std::string name_;
    std::optional<Protocol> protocol_;
    std::optional<Expansion> expansion_;
    std::vector<FaultLocation> locs_;
    std::unique_ptr<FrameSimulator> frames_;
    std::unique_ptr<VerdictEvaluator> verdicts_;
    std::unique_ptr<ExpansionEvaluator> expansion_verdicts_;
    std::unique_ptr<StatevecRunner> sv_;
    std::unique_ptr<StatevecRunner> sv_flip_;
};

/// Fault sample of shot `shot` under the master seed.
FaultSample shot_faults(const std::vector<FaultLocation> &locs, double p, uint64_t master, uint64_t shot);

/// Monte Carlo estimate at physical error rate p, deterministic for a given
/// seed regardless of the thread count. With `trace` set, runs on one thread
/// and writes one line per shot that had faults.
SweepPoint estimate(const Experiment &e, double p, uint64_t shots, uint64_t seed, std::ostream *trace = nullptr);

struct SingleFaultViolation {
    uint32_t location = 0;
    uint8_t pauli = 0;
    /// 0 for the sampled Born branch, 1 for the inverted one; -1 when the
    /// verdict came from frame propagation.
    int branch = -1;
    std::string description;
};

struct SingleFaultReport {
    size_t locations = 0;
    size_t faults = 0;
    size_t rejected = 0;
    size_t frame_verdicts = 0;
    size_t statevec_runs = 0;
    /// Single faults accepted with a residual outside the code space.
    size_t outside_codespace = 0;
    /// Exact fraction of single faults (uniform location, uniform Pauli)
    /// that are accepted, and that are accepted with a logical error.
    double accept_fraction = 0;
    double error_fraction = 0;
    std::vector<SingleFaultViolation> violations;
};

/// Every location times every non-identity Pauli as one shot. On the
/// state-vector backend, faults whose frame never meets an A or Adg gate are
/// judged exactly by frame propagation and the rest are simulated on both
/// Born branches; `full_statevec` simulates every fault instead.
SingleFaultReport check_single_faults(const Experiment &e, bool full_statevec = false);

struct StratifiedEstimate {
    size_t locations = 0;
    double q1 = 0;
    double s1 = 0;
    uint64_t pair_samples = 0;
    uint64_t pair_accepted = 0;
    uint64_t pair_errors = 0;
    double q2 = 0;
    double q2_se = 0;
    double s2 = 0;
    /// Leading coefficient C(N,2) q2 of p_L and its 95% interval.
    double a = 0;
    Interval a_ci;

    /// Acceptance-conditioned logical error rate truncated at two faults.
    double p_L(double p) const;
    double success(double p) const;
};

StratifiedEstimate stratified_estimate(const Experiment &e, uint64_t pair_samples, uint64_t seed);

/// Harness CSV.
extern const char *const kCsvHeader;
std::string csv_row(const SweepPoint &pt);
/// Throws std::runtime_error on a header or field mismatch.
std::vector<SweepPoint> read_csv(std::istream &in);
std::string points_json(const std::vector<SweepPoint> &pts);

/// Physical error rates swept by default.
std::vector<double> default_p_grid();

}  // namespace zld

#endif

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


// zld: build, check, simulate, sweep, fit and export zero-level distillation
// circuits.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <memory>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"

#include "zld/circuit_text.h"
#include "zld/harness.h"
#include "zld/protocols.h"
#include "zld/stats.h"

namespace {

using namespace zld;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;
constexpr uint64_t kFallbackSeed = 1;

struct Options {
    std::string protocol = "rotated";
    std::string backend = "tableau";
    std::string variant = "pi4";
    std::string expand = "off";
    std::string mode = "detection";
    size_t rounds = 0;
    std::vector<std::string> drop_checks;
    unsigned threads = 1;
    std::vector<double> ps;
    uint64_t shots = 10000;
    std::optional<uint64_t> seed;
    std::string out;
    std::string trace;
    bool full = false;
    uint64_t pairs = 0;
    std::string csv;
    std::string name = "rotated";
    std::string format = "text";
};

void add_circuit_flags(CLI::App *cmd, Options &o) {
    cmd->add_option("--protocol", o.protocol, "rotated, planar or conversion")->capture_default_str();
    cmd->add_option("--backend", o.backend, "tableau or statevec")->capture_default_str();
    cmd->add_option("--variant", o.variant, "pi8 (magic output) or pi4 (Clifford output)")->capture_default_str();
    cmd->add_option("--expand", o.expand, "grow the output: off, d5 or d7")->capture_default_str();
    cmd->add_option("--mode", o.mode, "expansion mode: detection or correction")->capture_default_str();
    cmd->add_option("--rounds", o.rounds, "expansion rounds (0 = target distance)")->capture_default_str();
    cmd->add_option("--drop-check", o.drop_checks, "remove the named acceptance check (repeatable)");
    cmd->add_option("--threads", o.threads, "shot worker threads; results do not depend on it")
        ->capture_default_str();
}

void add_run_flags(CLI::App *cmd, Options &o) {
    cmd->add_option("--shots", o.shots, "shots per error rate")->capture_default_str();
    cmd->add_option("--seed", o.seed, "master seed (default: $ZLD_SEED, else 1)");
    cmd->add_option("--out", o.out, "write CSV here instead of stdout");
    cmd->add_option("--trace", o.trace, "write one JSON line per faulty shot to this file ('-' for stderr)");
}

uint64_t resolve_seed(const Options &o) {
    if (o.seed) {
        return *o.seed;
    }
    const char *env = std::getenv("ZLD_SEED");
    if (!env || !*env) {
        return kFallbackSeed;
    }
    try {
        size_t used = 0;
        uint64_t v = std::stoull(env, &used, 0);
        if (env[used] == '\0') {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw ConfigError("seed", std::string("ZLD_SEED is not an unsigned integer: '") + env + "'");
}

RunConfig make_config(const Options &o) {
    RunConfig cfg;
    cfg.protocol = o.protocol;
    cfg.backend = parse_backend(o.backend);
    cfg.variant = parse_variant(o.variant);
    if (o.expand == "off") {
        cfg.expand_to = 0;
    } else if (o.expand == "d5") {
        cfg.expand_to = 5;
    } else if (o.expand == "d7") {
        cfg.expand_to = 7;
    } else {
        throw ConfigError("expand", "expected off, d5 or d7, got '" + o.expand + "'");
    }
    try {
        cfg.mode = parse_expansion_mode(o.mode);
    } catch (const std::invalid_argument &) {
        throw ConfigError("mode", "expected detection or correction, got '" + o.mode + "'");
    }
    cfg.rounds = o.rounds;
    cfg.drop_checks = o.drop_checks;
    cfg.threads = o.threads;
    return cfg;
}

/// Opens `path` or returns stdout for an empty path.
class Output {
   public:
    explicit Output(const std::string &path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw ConfigError("out", "cannot open '" + path + "' for writing");
            }
        }
    }
    std::ostream &stream() {
        return file_.is_open() ? file_ : std::cout;
    }

   private:
    std::ofstream file_;
};

class TraceSink {
   public:
    explicit TraceSink(const std::string &path) {
        if (path == "-") {
            os_ = &std::cerr;
        } else if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw ConfigError("trace", "cannot open '" + path + "' for writing");
            }
            os_ = &file_;
        }
    }
    std::ostream *get() {
        return os_;
    }

   private:
    std::ofstream file_;
    std::ostream *os_ = nullptr;
};

int run_points(const Options &o, const std::vector<double> &ps) {
    RunConfig cfg = make_config(o);
    uint64_t seed = resolve_seed(o);
    Experiment e(cfg);
    if (cfg.backend == Backend::Statevec) {
        std::cerr << "peak width: " << e.peak_width() << " qubits\n";
    }
    Output out(o.out);
    TraceSink trace(o.trace);
    out.stream() << kCsvHeader << "\n";
    for (double p : ps) {
        out.stream() << csv_row(estimate(e, p, o.shots, seed, trace.get())) << "\n";
    }
    return kExitOk;
}

int cmd_simulate(const Options &o) {
    if (o.ps.empty()) {
        throw ConfigError("p", "at least one --p is required");
    }
    return run_points(o, o.ps);
}

int cmd_sweep(const Options &o) {
    return run_points(o, o.ps.empty() ? default_p_grid() : o.ps);
}

int cmd_check(const Options &o) {
    Experiment e(make_config(o));
    SingleFaultReport r = check_single_faults(e, o.full);
    std::cout << r.violations.size() << " violations / " << r.locations << " locations x 3 (or 15) Paulis = "
              << r.faults << " single faults\n";
    std::cout << "circuit " << e.name() << ": rejected " << r.rejected << ", frame verdicts " << r.frame_verdicts
              << ", statevec runs " << r.statevec_runs << ", accepted outside code space " << r.outside_codespace
              << "\n";
    std::cout << "single-fault accept fraction " << r.accept_fraction << ", error fraction " << r.error_fraction
              << "\n";
    for (const auto &v : r.violations) {
        std::cout << "violation: " << v.description;
        if (v.branch >= 0) {
            std::cout << " (born branch " << v.branch << ")";
        }
        std::cout << "\n";
    }
    if (o.pairs > 0) {
        StratifiedEstimate s = stratified_estimate(e, o.pairs, resolve_seed(o));
        std::cout << "two-fault samples " << s.pair_samples << ": accepted " << s.pair_accepted << ", errors "
                  << s.pair_errors << "\n";
        std::cout << "a = " << s.a << " (95% CI " << s.a_ci.lo << " .. " << s.a_ci.hi << ")\n";
    }
    return r.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_fit(const Options &o) {
    std::ifstream in(o.csv);
    if (!in) {
        throw ConfigError("csv", "cannot open '" + o.csv + "'");
    }
    std::vector<SweepPoint> pts;
    try {
        pts = read_csv(in);
    } catch (const std::runtime_error &ex) {
        throw ConfigError("csv", ex.what());
    }
    std::map<std::tuple<std::string, std::string, std::string>, std::vector<SweepPoint>> groups;
    for (const auto &pt : pts) {
        groups[{pt.protocol, pt.backend, pt.variant}].push_back(pt);
    }
    if (groups.empty()) {
        throw ConfigError("csv", "no data rows");
    }
    for (const auto &[key, g] : groups) {
        FitResult f = fit_quadratic(g);
        char buf[512];
        std::snprintf(buf, sizeof buf,
                      "%s %s %s: a=%.1f se=%.1f ci=[%.1f, %.1f] chi2/dof=%.3f exponent=%.3f se=%.3f points=%zu",
                      std::get<0>(key).c_str(), std::get<1>(key).c_str(), std::get<2>(key).c_str(), f.a, f.a_se,
                      f.a_ci.lo, f.a_ci.hi, f.chi2_per_dof, f.b, f.b_se, f.points_used);
        std::cout << buf << "\n";
    }
    return kExitOk;
}

int cmd_export(const Options &o) {
    Protocol p = [&] {
        try {
            return build_protocol(o.name);
        } catch (const std::invalid_argument &ex) {
            throw ConfigError("name", ex.what());
        }
    }();
    Output out(o.out);
    if (o.format == "text") {
        out.stream() << circuit_to_text(p.circuit);
    } else if (o.format == "json") {
        out.stream() << circuit_to_json(p.circuit) << "\n";
    } else {
        throw ConfigError("format", "expected text or json, got '" + o.format + "'");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Zero-level magic state distillation on a square lattice"};
    app.require_subcommand(1);
    Options o;

    auto *sim = app.add_subcommand("simulate", "Monte Carlo estimate at one or more error rates (CSV)");
    add_circuit_flags(sim, o);
    add_run_flags(sim, o);
    sim->add_option("--p", o.ps, "physical error rate (repeatable)");

    auto *sweep = app.add_subcommand("sweep", "Monte Carlo over an error-rate grid (CSV)");
    add_circuit_flags(sweep, o);
    add_run_flags(sweep, o);
    sweep->add_option("--p", o.ps, "error rates (default 1e-4 3e-4 1e-3 3e-3 1e-2)")->delimiter(',');

    auto *check = app.add_subcommand("check", "Exhaustive single-fault verification");
    add_circuit_flags(check, o);
    check->add_flag("--full", o.full, "simulate every fault on the statevec backend");
    check->add_option("--pairs", o.pairs, "also sample this many two-fault configurations");
    check->add_option("--seed", o.seed, "seed for --pairs (default: $ZLD_SEED, else 1)");

    auto *fit = app.add_subcommand("fit", "Fit p_L = a p^2 to sweep CSV");
    fit->add_option("csv", o.csv, "CSV produced by simulate or sweep")->required();

    auto *exp = app.add_subcommand("export", "Print a protocol circuit");
    exp->add_option("--name", o.name, "rotated, planar or conversion")->capture_default_str();
    exp->add_option("--format", o.format, "text or json")->capture_default_str();
    exp->add_option("--out", o.out, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*sim) {
            return cmd_simulate(o);
        }
        if (*sweep) {
            return cmd_sweep(o);
        }
        if (*check) {
            return cmd_check(o);
        }
        if (*fit) {
            return cmd_fit(o);
        }
        return cmd_export(o);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

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

#ifndef ZLD_STATS_H
#define ZLD_STATS_H

#include <cstdint>
#include <string>
#include <vector>

namespace zld {

constexpr double kZ95 = 1.959963984540054;

struct Interval {
    double lo = 0;
    double hi = 1;
};

/// Wilson score interval for k successes in n trials; [0, 1] when n = 0.
Interval wilson_interval(uint64_t k, uint64_t n, double z = kZ95);

/// Aggregated Monte Carlo result at one physical error rate.
struct SweepPoint {
    std::string protocol;
    std::string backend;
    std::string variant;
    double p = 0;
    uint64_t shots = 0;
    uint64_t accepted = 0;
    uint64_t logical_errors = 0;
    uint64_t seed = 0;

    double p_L() const {
        return accepted ? (double)logical_errors / (double)accepted : 0.0;
    }
    double success() const {
        return shots ? (double)accepted / (double)shots : 0.0;
    }
    Interval p_L_ci() const {
        return wilson_interval(logical_errors, accepted);
    }
    Interval success_ci() const {
        return wilson_interval(accepted, shots);
    }
};

struct FitResult {
    /// p_L = a p^2 by inverse-variance weighted least squares.
    double a = 0;
    double a_se = 0;
    Interval a_ci;
    /// Weighted residuals (p_L - a p^2) / sigma, one per point used.
    std::vector<double> residuals;
    double chi2_per_dof = 0;
    /// log p_L = log c + b log p, weighted by the binomial variance of log p_L.
    double b = 0;
    double b_se = 0;
    double c = 0;
    size_t points_used = 0;
};

/// Minimum logical errors for a point to enter the fit.
constexpr uint64_t kMinFitErrors = 10;

/// Fits the points with at least kMinFitErrors logical errors. Throws
/// std::invalid_argument when fewer than three qualify.
FitResult fit_quadratic(const std::vector<SweepPoint> &points);

}  // namespace zld

#endif

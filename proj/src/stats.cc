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

#include "zld/stats.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zld {

Interval wilson_interval(uint64_t k, uint64_t n, double z) {
    if (n == 0) {
        return {0.0, 1.0};
    }
    double nn = (double)n;
    double ph = (double)k / nn;
    double z2 = z * z;
    double denom = 1 + z2 / nn;
    double centre = (ph + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(ph * (1 - ph) / nn + z2 / (4 * nn * nn)) / denom;
    Interval out{std::max(0.0, centre - half), std::min(1.0, centre + half)};
    if (k == 0) {
        out.lo = 0;
    }
    if (k == n) {
        out.hi = 1;
    }
    return out;
}

FitResult fit_quadratic(const std::vector<SweepPoint> &points) {
    std::vector<const SweepPoint *> used;
    for (const auto &pt : points) {
        if (pt.logical_errors >= kMinFitErrors && pt.accepted > pt.logical_errors && pt.p > 0) {
            used.push_back(&pt);
        }
    }
    if (used.size() < 3) {
        throw std::invalid_argument("fit needs at least 3 points with >= " + std::to_string(kMinFitErrors) +
                                    " logical errors, got " + std::to_string(used.size()));
    }
    FitResult r;
    r.points_used = used.size();

    double sxx = 0;
    double sxy = 0;
    std::vector<double> sigma;
    for (const SweepPoint *pt : used) {
        double y = pt->p_L();
        double var = y * (1 - y) / (double)pt->accepted;
        double x = pt->p * pt->p;
        sigma.push_back(std::sqrt(var));
        sxx += x * x / var;
        sxy += x * y / var;
    }
    r.a = sxy / sxx;
    r.a_se = 1 / std::sqrt(sxx);
    r.a_ci = {r.a - kZ95 * r.a_se, r.a + kZ95 * r.a_se};
    double chi2 = 0;
    for (size_t k = 0; k < used.size(); k++) {
        double res = (used[k]->p_L() - r.a * used[k]->p * used[k]->p) / sigma[k];
        r.residuals.push_back(res);
        chi2 += res * res;
    }
    r.chi2_per_dof = chi2 / (double)(used.size() - 1);

    // Weighted line through (log p, log p_L); var(log p_L) = (1 - p_L) / errors.
    double sw = 0;
    double sx = 0;
    double sy = 0;
    double sxx2 = 0;
    double sxy2 = 0;
    for (const SweepPoint *pt : used) {
        double y = std::log(pt->p_L());
        double x = std::log(pt->p);
        double w = (double)pt->logical_errors / (1 - pt->p_L());
        sw += w;
        sx += w * x;
        sy += w * y;
        sxx2 += w * x * x;
        sxy2 += w * x * y;
    }
    double det = sw * sxx2 - sx * sx;
    r.b = (sw * sxy2 - sx * sy) / det;
    r.b_se = std::sqrt(sw / det);
    r.c = std::exp((sy - r.b * sx) / sw);
    return r;
}

}  // namespace zld

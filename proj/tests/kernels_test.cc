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
#include <vector>

#include "doctest.h"
#include "zld/kernels.h"
#include "zld/rng.h"

using namespace zld;

namespace {

std::vector<cplx> random_state(size_t len, Rng &rng) {
    std::vector<cplx> v(len);
    double n = 0;
    for (auto &a : v) {
        a = cplx(rng.uniform() - 0.5, rng.uniform() - 0.5);
        n += std::norm(a);
    }
    for (auto &a : v) {
        a /= std::sqrt(n);
    }
    return v;
}

double max_diff(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    double m = 0;
    for (size_t i = 0; i < a.size(); i++) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

const KernelTable *simd() {
    const KernelTable *k = avx2_kernels();
    if (!k || !__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) {
        return nullptr;
    }
    return k;
}

}  // namespace

TEST_CASE("scalar kernels against a direct reference") {
    Rng rng(2);
    for (unsigned n = 1; n <= 6; n++) {
        size_t len = size_t{1} << n;
        for (unsigned q = 0; q < n; q++) {
            auto v = random_state(len, rng);
            cplx m[4] = {{0.3, 0.1}, {-0.2, 0.5}, {0.7, -0.4}, {0.1, 0.2}};
            auto ref = v;
            for (size_t i = 0; i < len; i++) {
                if (i >> q & 1) {
                    continue;
                }
                size_t j = i | (size_t{1} << q);
                ref[i] = m[0] * v[i] + m[1] * v[j];
                ref[j] = m[2] * v[i] + m[3] * v[j];
            }
            auto got = v;
            kScalarKernels.apply_1q(got.data(), len, q, m);
            CHECK(max_diff(got, ref) < 1e-14);

            double p1 = 0;
            for (size_t i = 0; i < len; i++) {
                if (i >> q & 1) {
                    p1 += std::norm(v[i]);
                }
            }
            CHECK(kScalarKernels.prob_one(v.data(), len, q) == doctest::Approx(p1).epsilon(1e-14));
        }
    }
}

TEST_CASE("avx2 kernels match scalar kernels") {
    const KernelTable *k = simd();
    if (!k) {
        MESSAGE("AVX2 unavailable on this host; skipping");
        return;
    }
    CHECK(&active_kernels() == k);
    Rng rng(11);
    cplx m[4] = {{0.6, -0.1}, {0.2, 0.3}, {-0.4, 0.2}, {0.5, 0.5}};
    for (unsigned n = 1; n <= 9; n++) {
        size_t len = size_t{1} << n;
        for (unsigned q = 0; q < n; q++) {
            auto v = random_state(len, rng);
            auto a = v;
            auto b = v;
            kScalarKernels.apply_1q(a.data(), len, q, m);
            k->apply_1q(b.data(), len, q, m);
            CHECK(max_diff(a, b) < 1e-13);

            CHECK(k->prob_one(v.data(), len, q) == doctest::Approx(kScalarKernels.prob_one(v.data(), len, q)));

            for (unsigned t = 0; t < n; t++) {
                if (t == q) {
                    continue;
                }
                auto x = v;
                auto y = v;
                kScalarKernels.apply_cnot(x.data(), len, q, t);
                k->apply_cnot(y.data(), len, q, t);
                CHECK(max_diff(x, y) == 0.0);
            }

            for (unsigned bit : {0u, 1u}) {
                std::vector<cplx> x(len / 2);
                std::vector<cplx> y(len / 2);
                kScalarKernels.collapse_remove(v.data(), len, q, bit, 1.5, x.data());
                k->collapse_remove(v.data(), len, q, bit, 1.5, y.data());
                CHECK(max_diff(x, y) < 1e-15);
                // In place.
                auto z = v;
                k->collapse_remove(z.data(), len, q, bit, 1.5, z.data());
                z.resize(len / 2);
                CHECK(max_diff(x, z) < 1e-15);
            }
        }
    }
}

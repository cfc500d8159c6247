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

#include "zld/kernels.h"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace zld {

namespace {

// Two complex numbers per register: (re0, im0, re1, im1).
inline __m256d cmul(__m256d v, __m256d re, __m256d im) {
    __m256d swapped = _mm256_permute_pd(v, 0x5);
    return _mm256_fmaddsub_pd(v, re, _mm256_mul_pd(swapped, im));
}

void apply_1q(cplx *amp, size_t len, unsigned q, const cplx *m) {
    if (q == 0 || len < 4) {
        kScalarKernels.apply_1q(amp, len, q, m);
        return;
    }
    size_t stride = (size_t)1 << q;
    __m256d r[4];
    __m256d i[4];
    for (int k = 0; k < 4; k++) {
        r[k] = _mm256_set1_pd(m[k].real());
        i[k] = _mm256_set1_pd(m[k].imag());
    }
    double *d = reinterpret_cast<double *>(amp);
    for (size_t base = 0; base < len; base += 2 * stride) {
        for (size_t j = base; j < base + stride; j += 2) {
            __m256d a0 = _mm256_loadu_pd(d + 2 * j);
            __m256d a1 = _mm256_loadu_pd(d + 2 * (j + stride));
            __m256d b0 = _mm256_add_pd(cmul(a0, r[0], i[0]), cmul(a1, r[1], i[1]));
            __m256d b1 = _mm256_add_pd(cmul(a0, r[2], i[2]), cmul(a1, r[3], i[3]));
            _mm256_storeu_pd(d + 2 * j, b0);
            _mm256_storeu_pd(d + 2 * (j + stride), b1);
        }
    }
}

void apply_cnot(cplx *amp, size_t len, unsigned control, unsigned target) {
    if (control == 0 || target == 0 || len < 4) {
        kScalarKernels.apply_cnot(amp, len, control, target);
        return;
    }
    size_t cbit = (size_t)1 << control;
    size_t tbit = (size_t)1 << target;
    double *d = reinterpret_cast<double *>(amp);
    for (size_t j = 0; j < len; j += 2) {
        if ((j & cbit) && !(j & tbit)) {
            __m256d a = _mm256_loadu_pd(d + 2 * j);
            __m256d b = _mm256_loadu_pd(d + 2 * (j | tbit));
            _mm256_storeu_pd(d + 2 * j, b);
            _mm256_storeu_pd(d + 2 * (j | tbit), a);
        }
    }
}

double prob_one(const cplx *amp, size_t len, unsigned q) {
    if (q == 0 || len < 4) {
        return kScalarKernels.prob_one(amp, len, q);
    }
    size_t stride = (size_t)1 << q;
    const double *d = reinterpret_cast<const double *>(amp);
    __m256d acc = _mm256_setzero_pd();
    for (size_t base = stride; base < len; base += 2 * stride) {
        for (size_t j = base; j < base + stride; j += 2) {
            __m256d a = _mm256_loadu_pd(d + 2 * j);
            acc = _mm256_fmadd_pd(a, a, acc);
        }
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

void collapse_remove(const cplx *amp, size_t len, unsigned q, unsigned bit, double scale, cplx *out) {
    if (q == 0 || len < 4) {
        kScalarKernels.collapse_remove(amp, len, q, bit, scale, out);
        return;
    }
    size_t stride = (size_t)1 << q;
    size_t offset = bit ? stride : 0;
    const double *src = reinterpret_cast<const double *>(amp);
    double *dst = reinterpret_cast<double *>(out);
    __m256d s = _mm256_set1_pd(scale);
    size_t k = 0;
    for (size_t base = 0; base < len; base += 2 * stride) {
        for (size_t j = base; j < base + stride; j += 2) {
            __m256d a = _mm256_loadu_pd(src + 2 * (j + offset));
            _mm256_storeu_pd(dst + 2 * k, _mm256_mul_pd(a, s));
            k += 2;
        }
    }
}

const KernelTable kAvx2 = {"avx2", apply_1q, apply_cnot, prob_one, collapse_remove};

}  // namespace

const KernelTable *avx2_kernels() {
    return &kAvx2;
}

}  // namespace zld

#else

namespace zld {

const KernelTable *avx2_kernels() {
    return nullptr;
}

}  // namespace zld

#endif

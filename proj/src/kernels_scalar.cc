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

#include <utility>

#include "zld/kernels.h"

namespace zld {

namespace {

void apply_1q(cplx *amp, size_t len, unsigned q, const cplx *m) {
    size_t stride = (size_t)1 << q;
    for (size_t base = 0; base < len; base += 2 * stride) {
        for (size_t i = base; i < base + stride; i++) {
            cplx a0 = amp[i];
            cplx a1 = amp[i + stride];
            amp[i] = m[0] * a0 + m[1] * a1;
            amp[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void apply_cnot(cplx *amp, size_t len, unsigned control, unsigned target) {
    size_t cbit = (size_t)1 << control;
    size_t tbit = (size_t)1 << target;
    for (size_t i = 0; i < len; i++) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amp[i], amp[i | tbit]);
        }
    }
}

double prob_one(const cplx *amp, size_t len, unsigned q) {
    size_t stride = (size_t)1 << q;
    double total = 0;
    for (size_t base = stride; base < len; base += 2 * stride) {
        for (size_t i = base; i < base + stride; i++) {
            total += std::norm(amp[i]);
        }
    }
    return total;
}

void collapse_remove(const cplx *amp, size_t len, unsigned q, unsigned bit, double scale, cplx *out) {
    size_t stride = (size_t)1 << q;
    size_t offset = bit ? stride : 0;
    size_t k = 0;
    for (size_t base = 0; base < len; base += 2 * stride) {
        for (size_t i = base; i < base + stride; i++) {
            out[k++] = amp[i + offset] * scale;
        }
    }
}

}  // namespace

const KernelTable kScalarKernels = {"scalar", apply_1q, apply_cnot, prob_one, collapse_remove};

}  // namespace zld

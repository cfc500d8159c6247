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

#ifndef ZLD_KERNELS_H
#define ZLD_KERNELS_H

#include <complex>
#include <cstddef>

namespace zld {

using cplx = std::complex<double>;

/// Dense state-vector kernels over `len` = 2^n amplitudes. Qubit q is bit q
/// of the amplitude index.
struct KernelTable {
    const char *name;
    /// amp <- (m00 m01; m10 m11) on qubit q, m in row-major order.
    void (*apply_1q)(cplx *amp, size_t len, unsigned q, const cplx *m);
    void (*apply_cnot)(cplx *amp, size_t len, unsigned control, unsigned target);
    /// Sum of |amp|^2 over indices with bit q set.
    double (*prob_one)(const cplx *amp, size_t len, unsigned q);
    /// Keeps the half with bit q equal to `bit`, scaled by `scale`, as a
    /// vector of len/2 amplitudes without qubit q. `out` may alias `amp`.
    void (*collapse_remove)(const cplx *amp, size_t len, unsigned q, unsigned bit, double scale, cplx *out);
};

extern const KernelTable kScalarKernels;
/// Null when the build has no AVX2 variant.
const KernelTable *avx2_kernels();

/// AVX2 when the CPU supports it, unless the environment variable
/// ZLD_KERNELS is set to "scalar".
const KernelTable &active_kernels();

}  // namespace zld

#endif

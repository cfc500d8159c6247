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

#include <cstdlib>
#include <cstring>

#include "zld/kernels.h"

namespace zld {

namespace {

const KernelTable &pick() {
    const char *env = std::getenv("ZLD_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) {
        return kScalarKernels;
    }
#if defined(__x86_64__) || defined(__i386__)
    const KernelTable *v = avx2_kernels();
    if (v && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return *v;
    }
#endif
    return kScalarKernels;
}

}  // namespace

const KernelTable &active_kernels() {
    static const KernelTable &k = pick();
    return k;
}

}  // namespace zld

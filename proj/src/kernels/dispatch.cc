// Copyright 2026 The pqaoa Authors
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
#include <stdexcept>
#include <string>

#include "kernels_internal.h"

namespace pqaoa::kernels {

const KernelTable *avx2_kernels() {
#ifdef PQAOA_HAVE_AVX2
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &avx2_kernel_table() : nullptr;
#else
    return nullptr;
#endif
}

std::vector<const KernelTable *> available_kernels() {
    std::vector<const KernelTable *> out{&scalar_kernels()};
    if (const KernelTable *k = avx2_kernels()) {
        out.push_back(k);
    }
    return out;
}

namespace {

const KernelTable &select_kernels() {
    const char *forced = std::getenv("PQAOA_KERNELS");
    if (forced != nullptr && *forced != '\0') {
        for (const KernelTable *k : available_kernels()) {
            if (k->name == forced) {
                return *k;
            }
        }
        throw std::runtime_error("PQAOA_KERNELS=" + std::string(forced) + " is not available on this machine");
    }
    return *available_kernels().back();
}

}  // namespace

const KernelTable &active_kernels() {
    static const KernelTable &chosen = select_kernels();
    return chosen;
}

}  // namespace pqaoa::kernels

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

#ifndef PQAOA_KERNELS_INTERNAL_H
#define PQAOA_KERNELS_INTERNAL_H

#include <algorithm>

#include "pqaoa/kernels.h"

namespace pqaoa::kernels {

// Qubits below this index are mixed block by block (2^11 amplitudes = 32 KiB)
// before the remaining qubits sweep the whole array.
inline constexpr unsigned kMixerBlockQubits = 11;

#ifdef PQAOA_HAVE_AVX2
const KernelTable &avx2_kernel_table();
#endif

}  // namespace pqaoa::kernels

#endif
